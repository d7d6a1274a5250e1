#include "gp/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "gp/errors.hpp"

namespace gp {

namespace {

// Exact structural check that the arcs of g are those of `count` disjoint
// copies of the pattern predicate applied inside each coset, nothing across.
void require(bool ok, const std::string& what) {
  if (!ok) throw InternalTheoremViolation("named-form verification failed: " + what);
}

bool component_is_cycle(const GPGraph& comp) {
  // Undirected C_len: connected, 2-regular. C_3 = K_3 also qualifies.
  if (comp.directed() || comp.n() != 2) return false;
  oracle::DenseGraph d(comp);
  return oracle::components(d, oracle::ComponentMode::weak).size() == 1;
}

bool component_is_directed_cycle(const GPGraph& comp) {
  if (!comp.directed() || comp.n() != 1) return false;
  oracle::DenseGraph d(comp);
  return oracle::components(d, oracle::ComponentMode::strong).size() == 1;
}

bool component_is_clique(const GPGraph& comp) {
  return !comp.directed() && comp.n() == comp.q() - 1;
}

NamedForm named_form_of(const GPGraph& g, const Decomposition& d);

NamedForm recognize(const GPGraph& g, const Decomposition& d) {
  const long q = g.q(), k = g.k(), p = d.params.p;
  const int m = d.params.m;
  const long copies = d.params.component_count;

  if (k == 1) {
    require(g.n() == q - 1 && !g.directed(), "K_q is (q-1)-regular undirected");
    return {NamedForm::Kind::CompleteGraph, q, 1, false, nullptr, ""};
  }
  if (k == 2) {
    // Paley graph (q = 1 mod 4) or Paley tournament (q = 3 mod 4); q even
    // cannot reach here because gcd(2, q-1) = 1.
    bool dir = (q % 4 == 3);
    require(g.directed() == dir && g.n() == (q - 1) / 2, "Paley degree/orientation");
    return {NamedForm::Kind::PaleyGraph, q, 1, dir, nullptr, ""};
  }
  if (q % 2 == 1 && k == (q - 1) / 2) {
    require(d.params.a == 1 && d.params.k_a == (p - 1) / 2, "cycle union parameters");
    require(component_is_cycle(*d.component_graph), "components are p-cycles");
    return {NamedForm::Kind::CycleUnion, p, copies, false, nullptr, ""};
  }
  if (q % 2 == 1 && k == q - 1) {
    require(d.params.a == 1 && d.params.k_a == p - 1, "directed cycle union parameters");
    require(component_is_directed_cycle(*d.component_graph), "components are directed p-cycles");
    return {NamedForm::Kind::CycleUnion, p, copies, true, nullptr, ""};
  }
  if (q % 2 == 0 && k == q - 1) {
    require(d.params.k_a == 1 && d.small_field->q() == 2, "perfect matching parameters");
    return {NamedForm::Kind::CliqueUnion, 2, q / 2, false, nullptr, ""};
  }
  if (m % 2 == 0) {
    long q0 = 1;
    for (int i = 0; i < m / 2; ++i) q0 *= p;
    if (k == q0 + 1) {
      require(d.params.k_a == 1 && d.small_field->q() == q0, "clique union parameters");
      require(component_is_clique(*d.component_graph), "components are cliques");
      return {NamedForm::Kind::CliqueUnion, q0, copies, false, nullptr, ""};
    }
    if (q0 % 2 == 1 && k == (q0 + 1) / 2) {
      require(d.params.connected, "rook graph is connected");
      if (q <= 256) {
        auto rook = oracle::cartesian_product(oracle::complete_graph(q0),
                                              oracle::complete_graph(q0));
        require(oracle::isomorphic(oracle::DenseGraph(g), rook).has_value(),
                "rook graph isomorphism");
      } else {
        auto srg = srg_check(g);
        require(srg && *srg == SrgParams{q0 * q0, 2 * (q0 - 1), q0 - 2, 2},
                "rook graph srg parameters");
      }
      return {NamedForm::Kind::RookGraph, q0, 1, false, nullptr, ""};
    }
  }
  if (!d.params.connected) {
    auto inner_d = decompose(*d.component_graph);
    auto inner = named_form_of(*d.component_graph, inner_d);
    // A disjoint union whose pieces resolve to X copies of Y flattens.
    long inner_copies = inner.count;
    inner.count = 1;
    NamedForm nf{NamedForm::Kind::ComponentUnion, 0, copies * inner_copies,
                 g.directed(), std::make_shared<NamedForm>(std::move(inner)), ""};
    return nf;
  }
  std::ostringstream os;
  os << "G(" << k << "," << q << ")";
  return {NamedForm::Kind::Unknown, q, 1, g.directed(), nullptr, os.str()};
}

NamedForm named_form_of(const GPGraph& g, const Decomposition& d) {
  return recognize(g, d);
}

long smallest_prime_factor(long n) {
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return f;
  return n;
}

void validate_witness(const GPGraph& g, const std::vector<long>& w) {
  require(w.size() % 2 == 1 && w.size() >= 3, "witness walk length is odd >= 3");
  const FiniteField& F = g.field();
  for (size_t i = 0; i < w.size(); ++i) {
    long u = w[i], v = w[(i + 1) % w.size()];
    long diff = F.sub(v, u);
    bool step = g.in_connection_set(diff) ||
                (!g.directed() && g.in_connection_set(F.neg(diff)));
    require(step, "witness step is an edge");
  }
  auto sorted = w;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "witness vertices distinct");
}

}  // namespace

std::string NamedForm::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::CompleteGraph:
      os << "K_" << size;
      break;
    case Kind::PaleyGraph:
      os << (directed ? "->P_" : "P_") << size;
      break;
    case Kind::CycleUnion:
      if (count > 1) os << count;
      os << (directed ? "->C_" : "C_") << size;
      break;
    case Kind::CliqueUnion:
      if (count > 1) os << count;
      os << "K_" << size;
      break;
    case Kind::RookGraph:
      os << "L_{" << size << "," << size << "}";
      break;
    case Kind::ComponentUnion:
      os << count << " x " << (inner ? inner->to_string() : "?");
      break;
    case Kind::Unknown:
      os << detail;
      break;
  }
  return os.str();
}

std::optional<SrgParams> srg_check(const GPGraph& g) {
  if (g.directed()) throw DirectedGraph("srg parameters require an undirected graph");
  const long v = g.q(), deg = g.n();
  oracle::DenseGraph dg(g);
  const long words = (v + 63) / 64;
  std::vector<uint64_t> rows(static_cast<size_t>(v) * words, 0);
  for (long u = 0; u < v; ++u)
    for (long w : g.adjacency()[u])
      rows[u * words + (w >> 6)] |= uint64_t{1} << (w & 63);

  long e = -1, dd = -1;
  for (long x = 0; x < v; ++x) {
    for (long y = x + 1; y < v; ++y) {
      long common = 0;
      for (long w = 0; w < words; ++w)
        common += std::popcount(rows[x * words + w] & rows[y * words + w]);
      long& slot = g.is_arc(x, y) ? e : dd;
      if (slot < 0)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  }
  if (e < 0) e = 0;    // edgeless would land here; unreachable for n >= 1
  if (dd < 0) dd = 0;  // complete graph: no non-adjacent pairs
  if ((v - deg - 1) * dd != deg * (deg - e - 1))
    throw InternalTheoremViolation("srg parameter identity (v-k-1)d = k(k-e-1) failed");
  return SrgParams{v, deg, e, dd};
}

SrgParams srg_family_params(long p, int l, int t) {
  if (p < 2 || l < 1 || t <= 1) throw PreconditionViolated("srg family requires t > 1, l >= 1");
  const int m = 2 * l * t;
  auto ppow = [p](int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  };
  const long pl = ppow(l), v = ppow(m);
  const long sign = (t % 2 == 0) ? 1 : -1;
  auto exact_div = [](long num, long den, const char* what) {
    if (num % den != 0)
      throw NonIntegralParameter(std::string("srg family parameter not integral: ") + what);
    return num / den;
  };
  const long k = exact_div(v - 1, pl + 1, "k");
  const long den = (pl + 1) * (pl + 1);
  const long e = exact_div(v - sign * ppow(l * (t + 1)) * (pl - 1) - 3 * pl - 2, den, "e");
  const long d = exact_div(v + sign * ppow(l * t) * (pl - 1) - pl, den, "d");
  return SrgParams{v, k, e, d};
}

BipartitenessResult bipartiteness(const GPGraph& g, const Decomposition& d) {
  const long q = g.q(), k = g.k(), p = d.params.p;
  const bool theorem_bipartite = (q % 2 == 0 && k == q - 1);

  BipartitenessResult r;
  r.bipartite = theorem_bipartite;
  if (!theorem_bipartite) {
    const FiniteField& F = g.field();
    std::vector<long> walk;
    if (q % 2 == 1) {
      // 0 -> 1 -> 2 -> ... -> p-1 -> 0, each step differs by 1 in R_k.
      for (long j = 0; j < p; ++j) walk.push_back(j);  // j*1 has index j
    } else {
      // Partial sums of the geometric progression of a primitive r-th root,
      // r the smallest (odd) prime dividing n.
      const long r_len = smallest_prime_factor(g.n());
      const long alpha = F.omega_pow((q - 1) / r_len);
      long acc = 0, pw = F.pow(alpha, 0);
      for (long j = 0; j < r_len; ++j) {
        walk.push_back(acc);
        acc = F.add(acc, pw);
        pw = F.mul(pw, alpha);
      }
      require(acc == 0, "even-field witness closes at zero");
    }
    validate_witness(g, walk);
    r.witness = std::move(walk);
  }

  auto tc = oracle::two_coloring(oracle::DenseGraph(g));
  if (tc.bipartition.has_value() != theorem_bipartite)
    throw InternalTheoremViolation("bipartiteness: 2-coloring oracle disagrees with theorem");
  return r;
}

BipartiteDouble bipartite_double(const GPGraph& g) {
  const long q = g.q();
  oracle::DenseGraph dd(2 * q, g.directed());
  for (long u = 0; u < q; ++u)
    for (long v : g.adjacency()[u]) {
      dd.add_arc(2 * u, 2 * v + 1);
      dd.add_arc(2 * u + 1, 2 * v);
    }
  auto mode = g.directed() ? oracle::ComponentMode::strong : oracle::ComponentMode::weak;
  bool conn = oracle::components(dd, mode).size() == 1;
  return {std::move(dd), conn};
}

bool semiprimitive_pair(long k, long p) {
  if (k <= 2) return true;
  long acc = p % k;
  // p^j mod k cycles with period ord_k(p) <= k; -1 must appear in the cycle.
  for (long j = 1; j <= k; ++j) {
    if (acc == k - 1) return true;
    if (acc == 1) return false;
    acc = acc * (p % k) % k;
  }
  return false;
}

bool ramanujan_check(const Spectrum& s, long n) {
  const double tol = std::max(s.tolerance, 1e-9);
  const double bound = 2.0 * std::sqrt(static_cast<double>(n - 1)) + tol;
  for (const auto& ent : s.entries) {
    if (std::abs(ent.value.imag()) > tol)
      throw DirectedSpectrum("Ramanujan bound applies to real spectra only");
    double re = ent.value.real();
    if (std::abs(re - n) <= tol || std::abs(re + n) <= tol) continue;  // trivial
    if (std::abs(re) > bound) return false;
  }
  return true;
}

bool hamming_identification(const GPGraph& g, int b, long q0) {
  long qb = 1;
  for (int i = 0; i < b; ++i) qb *= q0;
  if (g.q() != qb)
    throw ParameterMismatch("Hamming comparison needs q = q0^b");
  if (g.directed()) return false;
  oracle::DenseGraph dg(g);
  if (oracle::components(dg, oracle::ComponentMode::weak).size() != 1) return false;
  // Degree must match b(q0-1) before paying for the search.
  if (g.n() != static_cast<long>(b) * (q0 - 1)) return false;
  return oracle::isomorphic(dg, oracle::hamming_graph(b, q0)).has_value();
}

Classification classify(const GPGraph& g, const Decomposition& d) {
  Classification c;
  c.named_form = named_form_of(g, d);
  if (!g.directed()) c.srg_params = srg_check(g);

  auto bip = bipartiteness(g, d);
  c.bipartite = bip.bipartite;
  c.odd_cycle_witness = std::move(bip.witness);

  c.semiprimitive = semiprimitive_pair(g.k(), d.params.p);

  if (!g.directed()) {
    // The bound is a property of the connected piece; scale-invariant under
    // disjoint copies since multiplicities do not enter.
    const GPGraph& comp = d.params.connected ? g : *d.component_graph;
    c.ramanujan = ramanujan_check(character_spectrum(comp), comp.n());
  }
  return c;
}

std::string verdict_line(const GPGraph& g, const Decomposition& d,
                         const Classification& c) {
  std::ostringstream os;
  os << "G(" << g.k() << "," << g.q() << "): "
     << (g.directed() ? "directed" : "undirected") << ", ";
  if (d.params.connected)
    os << "connected";
  else
    os << d.params.component_count << " components = G(" << d.params.k_a << ","
       << d.small_field->q() << ")";
  if (c.named_form.kind != NamedForm::Kind::Unknown)
    os << ", " << c.named_form.to_string();
  os << ", " << (c.bipartite ? "bipartite" : "non-bipartite");
  if (!g.directed()) {
    if (c.srg_params) {
      const auto& s = *c.srg_params;
      os << ", srg(" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << ")";
    } else {
      os << ", not srg";
    }
  }
  return os.str();
}

}  // namespace gp
