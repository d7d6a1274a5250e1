#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gp/decompose.hpp"
#include "gp/gp_graph.hpp"

namespace gp {

/// A graph spectrum: eigenvalues with integer multiplicities, sorted by
/// (real part desc, imaginary part desc).
struct Spectrum {
  enum class Source { character_sum, numeric_oracle };

  struct Entry {
    std::complex<double> value;
    long multiplicity;
  };

  std::vector<Entry> entries;
  Source source = Source::character_sum;
  double tolerance = 1e-7;
  /// Ungrouped eigenvalues. For character spectra, raw[a] is the eigenvalue
  /// of the additive character indexed by field element a, which is what the
  /// per-character identities compare.
  std::vector<std::complex<double>> raw;

  long order() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// Groups a list of eigenvalues into (value, multiplicity) entries, merging
/// values within `tol` by union-find and representing each group by its mean.
Spectrum group_spectrum(std::vector<std::complex<double>> values,
                        Spectrum::Source source, double tol = 1e-7);

/// Exact spectrum via additive character sums:
/// lambda_a = sum_{s in R_k} exp(2 pi i Tr(a s) / p).
Spectrum character_spectrum(const GPGraph& g);

/// Numeric spectrum of the adjacency matrix (independent oracle route).
Spectrum numeric_spectrum(const GPGraph& g, long order_cap = 512);

/// Checks Spec(G) = [Spec(G_a)]^{p^{m-a}}: same eigenvalue set, every
/// multiplicity scaled by the component count.
bool verify_multiplicity_scaling(const GPGraph& g, const Decomposition& d);

/// max |lambda|; equals the regularity degree for a GP-graph.
double spectral_radius(const Spectrum& s);

/// (B1): -n in Spec; (B2): spectrum closed under negation with matching
/// multiplicities. For undirected graphs both are equivalent to
/// bipartiteness.
struct SymmetryTests {
  bool b1 = false;
  bool b2 = false;
};
SymmetryTests spectrum_symmetry_tests(const Spectrum& s, long n);

/// Per-character identity Spec(G(k/2,q))_a = 2 Re(Spec(G(k,q))_a) for a
/// directed g with even k and g_half = G(k/2, q).
bool real_part_relation(const GPGraph& g_half, const GPGraph& g,
                        double tol = 1e-7);

}  // namespace gp
