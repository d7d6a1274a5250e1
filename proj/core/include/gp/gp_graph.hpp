#pragma once

#include <memory>
#include <vector>

#include "gp/finite_field.hpp"

namespace gp {

/// The generalized Paley graph G(k,q) = Cay(F_q, R_k) with
/// R_k = {x^k : x in F_q*}, the k-th power residues.
///
/// Vertices are field elements, ordered by field index. k is normalized to
/// gcd(k, q-1) at construction. Immutable after build; safe to share across
/// threads.
class GPGraph {
 public:
  GPGraph(std::shared_ptr<const FiniteField> field, long k);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  long q() const { return field_->q(); }
  long k() const { return k_; }
  /// Regularity degree n = (q-1)/k.
  long n() const { return n_; }
  bool directed() const { return directed_; }

  /// R_k as sorted field indices.
  const std::vector<long>& connection_set() const { return rk_; }
  bool in_connection_set(long idx) const { return rk_mask_[idx]; }

  /// Out-neighbor lists by vertex index, each sorted ascending.
  const std::vector<std::vector<long>>& adjacency() const { return adj_; }

  bool is_arc(long u, long v) const { return rk_mask_[field_->sub(v, u)]; }
  bool is_arc(const FieldElement& u, const FieldElement& v) const {
    return is_arc(field_->index(u), field_->index(v));
  }

  /// Arc count (each undirected edge counts as two arcs).
  long arc_count() const { return q() * n_; }
  /// Edge count for undirected graphs: arc_count / 2.
  long edge_count() const { return directed_ ? arc_count() : arc_count() / 2; }

 private:
  std::shared_ptr<const FiniteField> field_;
  long k_;
  long n_;
  bool directed_;
  std::vector<long> rk_;
  std::vector<char> rk_mask_;
  std::vector<std::vector<long>> adj_;
};

inline GPGraph build_graph(std::shared_ptr<const FiniteField> field, long k) {
  return GPGraph(std::move(field), k);
}

/// Checks the arc-set identity G(k/2,q) = forward(G(k,q)) u reverse(G(k,q))
/// for a directed graph with even k. Throws PreconditionViolated otherwise.
bool orientation_union_check(const GPGraph& g_directed);

/// Same-field containment: true iff R_{k_big} is a subset of R_{k_small}.
/// Requires k_small | k_big. Throws FieldMismatch on different fields.
bool subgraph_containment(const GPGraph& g_big, const GPGraph& g_small);

}  // namespace gp
