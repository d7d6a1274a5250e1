#include "gp/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gp/oracle.hpp"

namespace gp {

namespace {

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  long find(long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(long x, long y) { parent[find(x)] = find(y); }
};

}  // namespace

long Spectrum::order() const {
  long total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::string Spectrum::to_json() const {
  nlohmann::ordered_json j;
  j["source"] =
      source == Source::character_sum ? "character_sum" : "numeric_oracle";
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries)
    arr.push_back({{"re", e.value.real()},
                   {"im", e.value.imag()},
                   {"mult", e.multiplicity}});
  j["entries"] = std::move(arr);
  return j.dump();
}

std::string Spectrum::to_csv() const {
  std::ostringstream os;
  os << "re,im,mult\n";
  for (const auto& e : entries)
    os << e.value.real() << "," << e.value.imag() << "," << e.multiplicity
       << "\n";
  return os.str();
}

Spectrum group_spectrum(std::vector<std::complex<double>> values,
                        Spectrum::Source source, double tol) {
  const long n = static_cast<long>(values.size());
  UnionFind uf(n);
  // Union-find over the tolerance graph keeps grouping order-independent.
  std::vector<long> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](long a, long b) {
    return values[a].real() < values[b].real();
  });
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      if (values[idx[j]].real() - values[idx[i]].real() > tol) break;
      if (std::abs(values[idx[i]] - values[idx[j]]) <= tol)
        uf.unite(idx[i], idx[j]);
    }
  }
  std::vector<std::complex<double>> sum(n, 0.0);
  std::vector<long> count(n, 0);
  for (long i = 0; i < n; ++i) {
    long r = uf.find(i);
    sum[r] += values[i];
    ++count[r];
  }
  Spectrum s;
  s.source = source;
  s.tolerance = tol;
  s.raw = std::move(values);
  for (long i = 0; i < n; ++i) {
    if (count[i] == 0) continue;
    auto v = sum[i] / static_cast<double>(count[i]);
    if (std::abs(v.imag()) <= tol) v = {v.real(), 0.0};
    s.entries.push_back({v, count[i]});
  }
  std::sort(s.entries.begin(), s.entries.end(), [](const auto& x, const auto& y) {
    if (x.value.real() != y.value.real())
      return x.value.real() > y.value.real();
    return x.value.imag() > y.value.imag();
  });
  return s;
}

Spectrum character_spectrum(const GPGraph& g) {
  const FiniteField& f = g.field();
  const long q = f.q();
  const long p = f.p();
  // roots of unity e^{2 pi i t / p}, exact rational angles
  std::vector<std::complex<double>> zeta(p);
  for (long t = 0; t < p; ++t) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) /
                 static_cast<double>(p);
    zeta[t] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<std::complex<double>> vals(q);
  for (long a = 0; a < q; ++a) {
    std::complex<double> acc = 0.0;
    for (long s : g.connection_set()) acc += zeta[f.trace(f.mul(a, s))];
    vals[a] = acc;
  }
  return group_spectrum(std::move(vals), Spectrum::Source::character_sum);
}

Spectrum numeric_spectrum(const GPGraph& g, long order_cap) {
  auto vals = oracle::numeric_eigenvalues(oracle::DenseGraph(g), order_cap);
  return group_spectrum(std::move(vals), Spectrum::Source::numeric_oracle,
                        1e-6);
}

bool verify_multiplicity_scaling(const GPGraph& g, const Decomposition& d) {
  Spectrum big = character_spectrum(g);
  Spectrum small = character_spectrum(*d.component_graph);
  if (big.entries.size() != small.entries.size()) return false;
  const long scale = d.params.component_count;
  const double tol = std::max(big.tolerance, small.tolerance);
  // Match as a multiset: the sort order of distinct eigenvalues whose real
  // parts tie (e.g. conjugate pairs) is sensitive to rounding noise.
  std::vector<bool> used(small.entries.size(), false);
  for (const auto& be : big.entries) {
    bool matched = false;
    for (size_t j = 0; j < small.entries.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(be.value - small.entries[j].value) <= tol &&
          be.multiplicity == scale * small.entries[j].multiplicity) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

double spectral_radius(const Spectrum& s) {
  double r = 0.0;
  for (const auto& e : s.entries) r = std::max(r, std::abs(e.value));
  return r;
}

SymmetryTests spectrum_symmetry_tests(const Spectrum& s, long n) {
  SymmetryTests t;
  const double tol = s.tolerance;
  for (const auto& e : s.entries)
    if (std::abs(e.value - std::complex<double>(-static_cast<double>(n), 0.0)) <=
        tol)
      t.b1 = true;
  t.b2 = true;
  for (const auto& e : s.entries) {
    bool matched = false;
    for (const auto& o : s.entries) {
      if (std::abs(o.value + e.value) <= tol &&
          o.multiplicity == e.multiplicity) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      t.b2 = false;
      break;
    }
  }
  return t;
}

bool real_part_relation(const GPGraph& g_half, const GPGraph& g, double tol) {
  if (!g.directed() || g.k() % 2 != 0)
    throw PreconditionViolated("real_part_relation needs directed g, even k");
  if (g_half.k() != g.k() / 2 || g_half.q() != g.q())
    throw PreconditionViolated("g_half must be G(k/2, q)");
  Spectrum sh = character_spectrum(g_half);
  Spectrum sf = character_spectrum(g);
  // compare per character index a, not merely as multisets
  for (long a = 0; a < g.q(); ++a) {
    std::complex<double> lhs = sh.raw[a];
    double rhs = 2.0 * sf.raw[a].real();
    if (std::abs(lhs - std::complex<double>(rhs, 0.0)) > tol) return false;
  }
  return true;
}

}  // namespace gp
