#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gp/gp_graph.hpp"

namespace gp::oracle {

/// Dense 0/1 adjacency, row = out-neighbors, packed 64 vertices per word.
class DenseGraph {
 public:
  DenseGraph(long order, bool directed);
  explicit DenseGraph(const GPGraph& g);

  long order() const { return order_; }
  bool directed() const { return directed_; }

  void add_arc(long u, long v);
  void add_edge(long u, long v);  // both arcs
  bool arc(long u, long v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  long out_degree(long u) const;
  std::vector<long> out_neighbors(long u) const;
  std::vector<long> in_neighbors(long u) const;

 private:
  long order_;
  long words_;
  bool directed_;
  std::vector<uint64_t> rows_;
};

enum class ComponentMode { weak, strong };

/// Vertex partition into connected components (weak ignores orientation,
/// strong uses mutual reachability). Each component's vertex list is sorted;
/// components are ordered by smallest member.
std::vector<std::vector<long>> components(const DenseGraph& g,
                                          ComponentMode mode);

/// Max shortest directed path length over ordered pairs; absent if some pair
/// is unreachable.
std::optional<long> diameter(const DenseGraph& g);

struct TwoColoring {
  /// Present iff the underlying undirected graph is 2-colorable.
  std::optional<std::vector<int>> bipartition;
  /// When not 2-colorable: a closed walk of odd length, as a vertex list
  /// v_0, ..., v_{2t} with v_0 = v_{2t} implied (the list omits the final
  /// return to v_0).
  std::vector<long> odd_closed_walk;
};

/// BFS 2-coloring of the underlying undirected graph.
TwoColoring two_coloring(const DenseGraph& g);

/// Eigenvalues of the 0/1 adjacency matrix with multiplicities, sorted by
/// (real desc, imag desc). Undirected graphs use a self-adjoint solver and
/// yield exactly-real values.
std::vector<std::complex<double>> numeric_eigenvalues(const DenseGraph& g,
                                                      long order_cap = 512);

/// Cartesian product of two undirected graphs. Vertex (u,v) has index
/// u * b.order() + v.
DenseGraph cartesian_product(const DenseGraph& a, const DenseGraph& b);

/// Complete graph K_n.
DenseGraph complete_graph(long n);

/// Hamming graph H(b,q): b-fold Cartesian power of K_q.
DenseGraph hamming_graph(int b, long q);

/// Backtracking isomorphism search with iterated neighborhood-degree
/// refinement. Returns a certified vertex bijection a -> b (verified
/// arc-by-arc before returning) or absent after exhaustive search.
std::optional<std::vector<long>> isomorphic(const DenseGraph& a,
                                            const DenseGraph& b,
                                            long size_cap = 256);

}  // namespace gp::oracle
