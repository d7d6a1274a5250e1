#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

/// Polynomial coefficients over Z_p, constant term first: coeffs[i] * x^i.
using Coeffs = std::vector<int>;

/// An element of GF(p^m) as a canonical coefficient vector of length m.
/// Equality is structural, so elements can be hashed and compared without
/// field context.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Coeffs c) : coeffs_(std::move(c)) {}

  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (int c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const FieldElement&) const = default;

  /// Lexicographic on the coefficient vector, constant term compared first.
  bool operator<(const FieldElement& o) const { return coeffs_ < o.coeffs_; }

 private:
  Coeffs coeffs_;
};

class FiniteField;

/// The subfield F_a = {x in F_q : x^{p^a} = x}, together with the generator
/// alpha = omega^{(q-1)/(p^a-1)} of its multiplicative group.
struct SubfieldDescriptor {
  int a = 0;
  FieldElement alpha;
  std::vector<FieldElement> elements;   // sorted by vertex index
  std::vector<long> element_indices;    // same set, as field indices
};

/// GF(p^m) built explicitly as Z_p[x]/(f) with f a verified-irreducible monic
/// modulus and a distinguished primitive element omega.
///
/// Every element has a vertex index in [0, q): index = sum coeffs[i] * p^i.
/// All arithmetic is available both on FieldElement values and directly on
/// indices; the index forms are the fast path used by graph construction.
class FiniteField {
 public:
  /// Default modulus: the lexicographically smallest monic irreducible of
  /// degree m (coefficients compared low-degree first). Default omega: the
  /// generator of F_q* with lexicographically smallest coefficient vector.
  FiniteField(long p, int m, std::optional<Coeffs> modulus_override = {});

  long p() const { return p_; }
  int m() const { return m_; }
  long q() const { return q_; }
  const Coeffs& modulus() const { return modulus_; }
  const FieldElement& omega() const { return omega_; }
  long omega_index() const { return omega_idx_; }

  // --- index <-> element ---
  long index(const FieldElement& x) const;
  FieldElement element(long idx) const;

  // --- arithmetic on indices ---
  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long base, long long e) const;
  /// omega^e (e taken mod q-1).
  long omega_pow(long long e) const;
  /// Discrete log base omega, in [0, q-2]. Throws LogOfZero on 0.
  long discrete_log(long a) const;
  /// Tr_{q/p}(x) as an integer in [0, p-1].
  int trace(long a) const;

  // --- arithmetic on elements ---
  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, long long e) const;
  long discrete_log(const FieldElement& x) const;
  int trace(const FieldElement& x) const;

  /// Subfield with p^a elements, a | m. Verifies that the Frobenius
  /// fixed-point set coincides with {0} union <alpha>.
  SubfieldDescriptor subfield(int a) const;

  /// Polynomial string for an element, e.g. "a^2+2a+1", "0", "1".
  std::string poly_label(long idx) const;
  std::string poly_label(const FieldElement& x) const;

  /// Deterministic JSON descriptor:
  /// {"p":3,"m":2,"modulus":[1,0,1],"omega":[1,1]}.
  std::string descriptor_json() const;

  /// Prime factors (without multiplicity) of q-1.
  const std::vector<long>& q1_prime_factors() const { return q1_factors_; }

  static constexpr long kLogTableCap = 1L << 20;

 private:
  long p_;
  int m_;
  long q_;
  Coeffs modulus_;
  FieldElement omega_;
  long omega_idx_ = 0;
  std::vector<long> pow_p_;      // p^i for i in [0, m]
  std::vector<long> exp_;        // exp_[j] = index of omega^j, j in [0, q-2]
  std::vector<long> log_;        // inverse of exp_; log_[0] = -1
  std::vector<int> trace_;       // trace table by index
  std::vector<long> q1_factors_;

  long bsgs_log(long a) const;
};

/// A field embedding GF(p^a) -> GF(p^m), a | m. Additive and multiplicative;
/// its image is exactly subfield(big, a). Among the a Frobenius-conjugate
/// embeddings, the one sending small.omega() to alpha = omega^{(q-1)/(p^a-1)}
/// is preferred when it exists, otherwise the one with the smallest image of
/// the small field's polynomial generator.
class FieldEmbedding {
 public:
  FieldEmbedding(const FiniteField& small, const FiniteField& big);

  long map_index(long small_idx) const { return image_[small_idx]; }
  FieldElement operator()(const FieldElement& x) const;

  const FiniteField& small() const { return *small_; }
  const FiniteField& big() const { return *big_; }

 private:
  const FiniteField* small_;
  const FiniteField* big_;
  std::vector<long> image_;  // by small-field index
};

/// Spec name for the embedding construction.
inline FieldEmbedding psi_embedding(const FiniteField& small,
                                    const FiniteField& big) {
  return FieldEmbedding(small, big);
}

/// Trial-division primality check.
bool is_prime(long n);

/// Prime factors of n without multiplicity, ascending.
std::vector<long> prime_factors(long n);

/// Multiplicative order of p modulo n; ord_1(p) is defined as 1.
int multiplicative_order(long p, long n);

}  // namespace gp
