#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gp/gp_graph.hpp"

namespace gp {

/// Arithmetic of the component decomposition of G(k, p^m):
/// n = (p^m-1)/k, a = ord_n(p), k_a = (p^a-1)/n, component count p^{m-a}.
struct ConnectivityParams {
  long p = 0;
  int m = 0;
  long k = 0;
  long n = 0;
  int a = 0;
  long k_a = 0;
  long component_count = 0;
  bool connected = false;
  /// n is a primitive divisor of p^m - 1 (equivalent to connected).
  bool primitive_divisor = false;
};

/// Throws NotADivisor unless k | p^m - 1. ord_1(p) is taken to be 1, so the
/// n = 1 case (connection set {1}) decomposes into G(p-1, p) components.
ConnectivityParams connectivity_params(long p, int m, long k);

/// The connected-component decomposition of a GP-graph: p^{m-a} cosets of
/// the subfield F_a, each induced subgraph isomorphic to G(k_a, p^a) via the
/// witness x -> psi(x) + h. Construction verifies, exhaustively:
///   - R_k = {w^{k_a} : w in F_a*}         (connection set lives in F_a)
///   - N(x) subset of F_a for x in F_a     (components are coset-closed)
///   - every witness preserves arcs in both directions.
/// Any failure throws InternalTheoremViolation: it falsifies the
/// implementation, not the theorem.
struct Decomposition {
  ConnectivityParams params;
  SubfieldDescriptor subfield;
  /// Lexicographically smallest member of each coset F_a + h, ascending.
  std::vector<long> coset_reps;
  std::shared_ptr<const FiniteField> small_field;
  std::shared_ptr<const GPGraph> component_graph;  // G(k_a, p^a)
  /// witnesses[i][x] = field index in the big graph of the image of small
  /// vertex x under psi + coset_reps[i]... one bijection per coset.
  std::vector<std::vector<long>> witnesses;
};

Decomposition decompose(const GPGraph& g);

/// Aut(G) = Aut(G_a) wr S_{p^{m-a}}, reported symbolically. The inner group
/// is resolved for cliques and cycles; otherwise "unknown".
struct AutDescriptor {
  std::string inner;      // e.g. "S_9", "D_7", "Z_5", "unknown(G(3,16))"
  long copies = 1;
  /// |inner|^{copies} * copies! as a decimal string, when |inner| is known.
  std::optional<std::string> order;
  std::string wreath() const { return inner + " wr S_" + std::to_string(copies); }
};

AutDescriptor aut_descriptor(const Decomposition& d);

/// Waring number g(k,q) = diam(G(k,q)); absent when the graph is
/// disconnected (the number does not exist).
std::optional<long> waring_number(const GPGraph& g, const Decomposition& d);

/// JSON report, e.g. {"q":81,"k":20,"n":4,"a":2,"k_a":2,"components":9,...}.
std::string decomposition_report_json(const GPGraph& g, const Decomposition& d);

}  // namespace gp
