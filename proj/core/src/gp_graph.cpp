#include "gp/gp_graph.hpp"

#include <algorithm>
#include <numeric>

namespace gp {

GPGraph::GPGraph(std::shared_ptr<const FiniteField> field, long k)
    : field_(std::move(field)) {
  if (k < 1) throw PreconditionViolated("k must be >= 1");
  const FiniteField& f = *field_;
  const long q = f.q();
  k_ = std::gcd(k, q - 1);
  n_ = (q - 1) / k_;

  // R_k = <omega^k>, as k-th powers of everything.
  rk_.reserve(n_);
  rk_mask_.assign(q, 0);
  for (long j = 0; j < n_; ++j) {
    long s = f.omega_pow(static_cast<long long>(j) * k_);
    rk_.push_back(s);
    rk_mask_[s] = 1;
  }
  std::sort(rk_.begin(), rk_.end());

  // (C2): undirected iff q even, or q odd and k | (q-1)/2.
  directed_ = !(q % 2 == 0 || ((q - 1) / 2) % k_ == 0);

  adj_.resize(q);
  for (long u = 0; u < q; ++u) {
    auto& row = adj_[u];
    row.reserve(n_);
    for (long s : rk_) row.push_back(f.add(u, s));
    std::sort(row.begin(), row.end());
  }
}

bool orientation_union_check(const GPGraph& g) {
  if (!g.directed() || g.k() % 2 != 0)
    throw PreconditionViolated(
        "orientation_union_check needs a directed graph with even k");
  GPGraph half(g.field_ptr(), g.k() / 2);
  const long q = g.q();
  for (long u = 0; u < q; ++u) {
    for (long v = 0; v < q; ++v) {
      if (u == v) continue;
      bool in_union = g.is_arc(u, v) || g.is_arc(v, u);
      if (in_union != half.is_arc(u, v)) return false;
    }
  }
  return true;
}

bool subgraph_containment(const GPGraph& g_big, const GPGraph& g_small) {
  if (&g_big.field() != &g_small.field() &&
      g_big.field().descriptor_json() != g_small.field().descriptor_json())
    throw FieldMismatch();
  if (g_big.k() % g_small.k() != 0)
    throw PreconditionViolated("k_small must divide k_big");
  for (long s : g_big.connection_set())
    if (!g_small.in_connection_set(s)) return false;
  return true;
}

}  // namespace gp
