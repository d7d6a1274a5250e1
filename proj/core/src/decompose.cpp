#include "gp/decompose.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "gp/oracle.hpp"

namespace gp {

ConnectivityParams connectivity_params(long p, int m, long k) {
  long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (k < 1 || (q - 1) % k != 0) throw NotADivisor(k, q - 1);
  ConnectivityParams cp;
  cp.p = p;
  cp.m = m;
  cp.k = k;
  cp.n = (q - 1) / k;
  cp.a = multiplicative_order(p, cp.n);
  long pa = 1;
  for (int i = 0; i < cp.a; ++i) pa *= p;
  cp.k_a = (pa - 1) / cp.n;
  cp.component_count = 1;
  for (int i = 0; i < m - cp.a; ++i) cp.component_count *= p;
  cp.connected = (cp.a == m);
  // n † p^m - 1: n | p^m - 1 but no p^t - 1 with t < m.
  cp.primitive_divisor = cp.connected;
  return cp;
}

Decomposition decompose(const GPGraph& g) {
  const FiniteField& f = g.field();
  const long q = f.q();

  Decomposition d;
  d.params = connectivity_params(f.p(), f.m(), g.k());
  d.subfield = f.subfield(d.params.a);

  // Claim 1: R_k = {w^{k_a} : w in F_a*}.
  {
    std::vector<long> powers;
    for (long w : d.subfield.element_indices)
      if (w != 0) powers.push_back(f.pow(w, d.params.k_a));
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    if (powers != g.connection_set())
      throw InternalTheoremViolation(
          "claim 1: R_k != k_a-th powers of the subfield");
  }

  // Claim 2: N(x) subset of F_a for every x in F_a.
  {
    std::vector<char> in_fa(q, 0);
    for (long x : d.subfield.element_indices) in_fa[x] = 1;
    for (long x : d.subfield.element_indices)
      for (long y : g.adjacency()[x])
        if (!in_fa[y])
          throw InternalTheoremViolation(
              "claim 2: neighborhood escapes the subfield at vertex " +
              std::to_string(x));
  }

  // Cosets F_a + h partition F_q; representative = smallest member.
  std::vector<long> coset_of(q, -1);
  for (long h = 0; h < q; ++h) {
    if (coset_of[h] >= 0) continue;
    d.coset_reps.push_back(h);
    for (long x : d.subfield.element_indices) {
      long y = f.add(x, h);
      if (coset_of[y] >= 0)
        throw InternalTheoremViolation("cosets are not disjoint");
      coset_of[y] = static_cast<long>(d.coset_reps.size()) - 1;
    }
  }
  if (static_cast<long>(d.coset_reps.size()) != d.params.component_count)
    throw InternalTheoremViolation("coset count != p^{m-a}");

  // Independent small field GF(p^a) with its own minimal modulus, and the
  // component graph over it.
  d.small_field = std::make_shared<FiniteField>(f.p(), d.params.a);
  d.component_graph = std::make_shared<GPGraph>(d.small_field, d.params.k_a);

  // Witnesses: x -> psi(x) + h, verified arc-preserving in both directions.
  FieldEmbedding psi(*d.small_field, f);
  const long pa = d.small_field->q();
  d.witnesses.reserve(d.coset_reps.size());
  for (long h : d.coset_reps) {
    std::vector<long> w(pa);
    for (long x = 0; x < pa; ++x) w[x] = f.add(psi.map_index(x), h);
    d.witnesses.push_back(std::move(w));
  }
  const GPGraph& cg = *d.component_graph;
  for (const auto& w : d.witnesses) {
    for (long x = 0; x < pa; ++x) {
      for (long y = 0; y < pa; ++y) {
        if (x == y) continue;
        if (cg.is_arc(x, y) != g.is_arc(w[x], w[y]))
          throw InternalTheoremViolation(
              "witness is not arc-preserving at (" + std::to_string(x) + "," +
              std::to_string(y) + ")");
      }
    }
  }

  return d;
}

AutDescriptor aut_descriptor(const Decomposition& d) {
  namespace mp = boost::multiprecision;
  AutDescriptor a;
  a.copies = d.params.component_count;
  const long pa = d.small_field->q();
  const long ka = d.params.k_a;

  std::optional<mp::cpp_int> inner_order;
  if (ka == 1) {
    // complete graph K_{p^a}
    a.inner = pa == 2 ? "Z_2" : "S_" + std::to_string(pa);
    mp::cpp_int fact = 1;
    for (long i = 2; i <= pa; ++i) fact *= i;
    inner_order = fact;
  } else if (d.params.a == 1 && pa % 2 == 1 && ka == (pa - 1) / 2) {
    // undirected p-cycle
    a.inner = "D_" + std::to_string(pa);
    inner_order = mp::cpp_int(2 * pa);
  } else if (d.params.a == 1 && pa % 2 == 1 && ka == pa - 1) {
    // directed p-cycle
    a.inner = "Z_" + std::to_string(pa);
    inner_order = mp::cpp_int(pa);
  } else {
    a.inner = "unknown(G(" + std::to_string(ka) + "," + std::to_string(pa) + "))";
  }

  if (inner_order) {
    mp::cpp_int total = 1;
    for (long i = 0; i < a.copies; ++i) total *= *inner_order;
    for (long i = 2; i <= a.copies; ++i) total *= i;
    a.order = total.str();
  }
  return a;
}

std::optional<long> waring_number(const GPGraph& g, const Decomposition& d) {
  if (!d.params.connected) return std::nullopt;
  oracle::DenseGraph dg(g);
  auto diam = oracle::diameter(dg);
  if (!diam)
    throw InternalTheoremViolation("connected graph with unreachable pair");
  return diam;
}

std::string decomposition_report_json(const GPGraph& g,
                                      const Decomposition& d) {
  nlohmann::ordered_json j;
  j["q"] = g.q();
  j["k"] = g.k();
  j["n"] = g.n();
  j["a"] = d.params.a;
  j["k_a"] = d.params.k_a;
  j["components"] = d.params.component_count;
  j["directed"] = g.directed();
  j["connected"] = d.params.connected;
  j["component_graph"] = {{"q", d.small_field->q()}, {"k", d.params.k_a}};
  AutDescriptor a = aut_descriptor(d);
  j["aut"] = a.wreath();
  if (a.order) j["aut_order"] = *a.order;
  auto w = waring_number(g, d);
  if (w)
    j["waring"] = *w;
  else
    j["waring"] = nullptr;
  return j.dump();
}

}  // namespace gp
