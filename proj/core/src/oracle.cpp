#include "gp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace gp::oracle {

DenseGraph::DenseGraph(long order, bool directed)
    : order_(order), words_((order + 63) / 64), directed_(directed),
      rows_(order * words_, 0) {}

DenseGraph::DenseGraph(const GPGraph& g) : DenseGraph(g.q(), g.directed()) {
  for (long u = 0; u < g.q(); ++u)
    for (long v : g.adjacency()[u]) add_arc(u, v);
}

void DenseGraph::add_arc(long u, long v) {
  if (u == v) throw PreconditionViolated("DenseGraph has zero diagonal");
  rows_[u * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  if (!directed_) rows_[v * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void DenseGraph::add_edge(long u, long v) {
  add_arc(u, v);
  if (directed_) add_arc(v, u);
}

long DenseGraph::out_degree(long u) const {
  long d = 0;
  for (long w = 0; w < words_; ++w)
    d += __builtin_popcountll(rows_[u * words_ + w]);
  return d;
}

std::vector<long> DenseGraph::out_neighbors(long u) const {
  std::vector<long> ns;
  for (long v = 0; v < order_; ++v)
    if (arc(u, v)) ns.push_back(v);
  return ns;
}

std::vector<long> DenseGraph::in_neighbors(long u) const {
  std::vector<long> ns;
  for (long v = 0; v < order_; ++v)
    if (arc(v, u)) ns.push_back(v);
  return ns;
}

namespace {

// BFS over an implicit neighbor relation.
template <typename NeighborFn>
void bfs(long start, long order, NeighborFn&& neigh, std::vector<int>& seen) {
  std::deque<long> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    long u = queue.front();
    queue.pop_front();
    for (long v = 0; v < order; ++v) {
      if (!seen[v] && neigh(u, v)) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

std::vector<std::vector<long>> components(const DenseGraph& g,
                                          ComponentMode mode) {
  const long n = g.order();
  std::vector<std::vector<long>> comps;
  if (mode == ComponentMode::weak || !g.directed()) {
    std::vector<int> assigned(n, 0);
    for (long s = 0; s < n; ++s) {
      if (assigned[s]) continue;
      std::vector<int> seen(n, 0);
      bfs(s, n, [&](long u, long v) { return g.arc(u, v) || g.arc(v, u); },
          seen);
      std::vector<long> comp;
      for (long v = 0; v < n; ++v)
        if (seen[v] && !assigned[v]) {
          assigned[v] = 1;
          comp.push_back(v);
        }
      comps.push_back(std::move(comp));
    }
  } else {
    // strong: forward/backward reachability intersection per unassigned seed
    std::vector<int> assigned(n, 0);
    for (long s = 0; s < n; ++s) {
      if (assigned[s]) continue;
      std::vector<int> fwd(n, 0), bwd(n, 0);
      bfs(s, n, [&](long u, long v) { return g.arc(u, v); }, fwd);
      bfs(s, n, [&](long u, long v) { return g.arc(v, u); }, bwd);
      std::vector<long> comp;
      for (long v = 0; v < n; ++v)
        if (fwd[v] && bwd[v]) {
          assigned[v] = 1;
          comp.push_back(v);
        }
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

std::optional<long> diameter(const DenseGraph& g) {
  const long n = g.order();
  long best = 0;
  std::vector<long> dist(n);
  for (long s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<long> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      long u = queue.front();
      queue.pop_front();
      for (long v = 0; v < n; ++v) {
        if (dist[v] < 0 && g.arc(u, v)) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (long v = 0; v < n; ++v) {
      if (dist[v] < 0) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

TwoColoring two_coloring(const DenseGraph& g) {
  const long n = g.order();
  std::vector<int> color(n, -1);
  std::vector<long> parent(n, -1);
  auto und = [&](long u, long v) { return g.arc(u, v) || g.arc(v, u); };
  for (long s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<long> queue{s};
    while (!queue.empty()) {
      long u = queue.front();
      queue.pop_front();
      for (long v = 0; v < n; ++v) {
        if (!und(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Odd closed walk: path(root..u) + (u,v) + reversed path(v..root).
          std::vector<long> pu, pv;
          for (long x = u; x >= 0; x = parent[x]) pu.push_back(x);
          for (long x = v; x >= 0; x = parent[x]) pv.push_back(x);
          std::reverse(pu.begin(), pu.end());  // root .. u
          pv.pop_back();  // drop the root: the walk closes back to pu.front()
          TwoColoring r;
          r.odd_closed_walk = pu;              // root..u
          r.odd_closed_walk.insert(r.odd_closed_walk.end(), pv.begin(),
                                   pv.end());  // v..child-of-root
          return r;
        }
      }
    }
  }
  TwoColoring r;
  r.bipartition = std::move(color);
  return r;
}

std::vector<std::complex<double>> numeric_eigenvalues(const DenseGraph& g,
                                                      long order_cap) {
  const long n = g.order();
  if (n > order_cap) throw OrderCap(order_cap);
  std::vector<std::complex<double>> vals;
  vals.reserve(n);
  if (!g.directed()) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (long u = 0; u < n; ++u)
      for (long v = 0; v < n; ++v)
        if (g.arc(u, v)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
      throw ConvergenceFailure("self-adjoint solver");
    for (long i = 0; i < n; ++i) vals.emplace_back(solver.eigenvalues()(i), 0.0);
  } else {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (long u = 0; u < n; ++u)
      for (long v = 0; v < n; ++v)
        if (g.arc(u, v)) a(u, v) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
      throw ConvergenceFailure("general solver");
    for (long i = 0; i < n; ++i) vals.push_back(solver.eigenvalues()(i));
  }
  std::sort(vals.begin(), vals.end(), [](auto x, auto y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return vals;
}

DenseGraph cartesian_product(const DenseGraph& a, const DenseGraph& b) {
  if (a.directed() || b.directed())
    throw DirectedInput("cartesian_product");
  DenseGraph r(a.order() * b.order(), false);
  for (long u1 = 0; u1 < a.order(); ++u1)
    for (long v1 = 0; v1 < b.order(); ++v1) {
      long x = u1 * b.order() + v1;
      // same first coordinate, adjacent second
      for (long v2 = v1 + 1; v2 < b.order(); ++v2)
        if (b.arc(v1, v2)) r.add_arc(x, u1 * b.order() + v2);
      // adjacent first coordinate, same second
      for (long u2 = u1 + 1; u2 < a.order(); ++u2)
        if (a.arc(u1, u2)) r.add_arc(x, u2 * b.order() + v1);
    }
  return r;
}

DenseGraph complete_graph(long n) {
  DenseGraph g(n, false);
  for (long u = 0; u < n; ++u)
    for (long v = u + 1; v < n; ++v) g.add_arc(u, v);
  return g;
}

DenseGraph hamming_graph(int b, long q) {
  DenseGraph g = complete_graph(q);
  for (int i = 1; i < b; ++i) g = cartesian_product(g, complete_graph(q));
  return g;
}

namespace {

// Iterated neighborhood-degree refinement (1-dimensional Weisfeiler-Leman).
// Returns a stable color per vertex; isomorphic graphs get matching color
// multisets.
std::vector<long> wl_colors(const DenseGraph& g) {
  const long n = g.order();
  std::vector<long> color(n);
  for (long v = 0; v < n; ++v)
    color[v] = g.out_degree(v) * (n + 1) +
               (g.directed() ? static_cast<long>(g.in_neighbors(v).size()) : 0);
  for (long round = 0; round < n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (long v = 0; v < n; ++v) {
      std::vector<long> out, in;
      for (long u = 0; u < n; ++u) {
        if (g.arc(v, u)) out.push_back(color[u]);
        if (g.directed() && g.arc(u, v)) in.push_back(color[u]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sig[v].push_back(color[v]);
      sig[v].insert(sig[v].end(), out.begin(), out.end());
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), in.begin(), in.end());
    }
    // Canonical relabel: rank of the signature in sorted order, so that
    // matching signatures in different graphs get the same color id.
    std::map<std::vector<long>, long> relabel;
    for (long v = 0; v < n; ++v) relabel.emplace(sig[v], 0);
    long rank = 0;
    for (auto& [key, val] : relabel) val = rank++;
    std::vector<long> next(n);
    for (long v = 0; v < n; ++v) next[v] = relabel[sig[v]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct IsoState {
  const DenseGraph* a;
  const DenseGraph* b;
  std::vector<long> map_ab;   // a-vertex -> b-vertex or -1
  std::vector<char> used_b;
  const std::vector<long>* col_a;
  const std::vector<long>* col_b;
  std::vector<long> order;    // a-vertices in assignment order

  bool consistent(long va, long vb) const {
    if ((*col_a)[va] != (*col_b)[vb]) return false;
    for (long ua = 0; ua < a->order(); ++ua) {
      long ub = map_ab[ua];
      if (ub < 0) continue;
      if (a->arc(va, ua) != b->arc(vb, ub)) return false;
      if (a->arc(ua, va) != b->arc(ub, vb)) return false;
    }
    return true;
  }

  bool search(size_t depth) {
    if (depth == order.size()) return true;
    long va = order[depth];
    for (long vb = 0; vb < b->order(); ++vb) {
      if (used_b[vb]) continue;
      if (!consistent(va, vb)) continue;
      map_ab[va] = vb;
      used_b[vb] = 1;
      if (search(depth + 1)) return true;
      map_ab[va] = -1;
      used_b[vb] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<long>> isomorphic(const DenseGraph& a,
                                            const DenseGraph& b,
                                            long size_cap) {
  if (a.order() > size_cap || b.order() > size_cap)
    throw SizeCap("isomorphic", size_cap);
  if (a.order() != b.order() || a.directed() != b.directed())
    return std::nullopt;
  const long n = a.order();
  if (n == 0) return std::vector<long>{};

  std::vector<long> ca = wl_colors(a), cb = wl_colors(b);
  {
    std::vector<long> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Assignment order: grow connected to the mapped set, most-constrained
  // (rarest color class) first.
  std::vector<long> class_size(n + 1, 0);
  for (long c : ca) ++class_size[c];
  std::vector<long> order;
  std::vector<char> placed(n, 0);
  auto und_adj = [&](long u, long v) { return a.arc(u, v) || a.arc(v, u); };
  for (long step = 0; step < n; ++step) {
    long best = -1;
    long best_attach = -1, best_class = 0;
    for (long v = 0; v < n; ++v) {
      if (placed[v]) continue;
      long attach = 0;
      for (long u : order)
        if (und_adj(u, v)) ++attach;
      if (best < 0 || attach > best_attach ||
          (attach == best_attach && class_size[ca[v]] < best_class)) {
        best = v;
        best_attach = attach;
        best_class = class_size[ca[v]];
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  IsoState st{&a, &b, std::vector<long>(n, -1), std::vector<char>(n, 0),
              &ca, &cb, order};
  if (!st.search(0)) return std::nullopt;

  // Certify before returning: false positives are impossible by construction.
  for (long u = 0; u < n; ++u)
    for (long v = 0; v < n; ++v)
      if (a.arc(u, v) != b.arc(st.map_ab[u], st.map_ab[v]))
        throw InternalTheoremViolation("isomorphic: uncertified bijection");
  return st.map_ab;
}

}  // namespace gp::oracle
