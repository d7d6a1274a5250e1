#include "gp/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace gp {

namespace {

// Dense polynomial arithmetic over Z_p, used only during field construction.
using Poly = std::vector<int>;  // coeffs[i] * x^i, may carry trailing zeros

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly f, const Poly& g, long p) {
  int dg = degree(g);
  for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
    if (f[i] == 0) continue;
    // g is monic
    int c = f[i];
    for (int j = 0; j <= dg; ++j) {
      f[i - dg + j] = static_cast<int>(
          ((f[i - dg + j] - static_cast<long>(c) * g[j]) % p + p) % p);
    }
  }
  f.resize(dg);
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>(
          (r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& mod, long p) {
  Poly r{1};
  base = poly_mod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  while (degree(b) >= 0) {
    // make b monic
    int db = degree(b);
    // modular inverse of leading coefficient by Fermat
    long lead = b[db], inv = 1, e = p - 2, base = lead;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    Poly bm(db + 1);
    for (int i = 0; i <= db; ++i) bm[i] = static_cast<int>(b[i] * inv % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// x^{p^d} mod f, computed by iterated p-th powering.
Poly frobenius_power(const Poly& f, long p, int d) {
  Poly x{0, 1};
  Poly r = poly_mod(x, f, p);
  for (int i = 0; i < d; ++i) r = poly_powmod(std::move(r), p, f, p);
  return r;
}

bool is_irreducible(const Poly& f, long p, int m) {
  if (m == 1) return true;
  // f irreducible of degree m  <=>  x^{p^m} = x mod f, and for each prime
  // r | m, gcd(x^{p^{m/r}} - x, f) = 1.
  Poly xq = frobenius_power(f, p, m);
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (degree(xq) != degree(x)) return false;
  Poly diff(std::max(xq.size(), x.size()), 0);
  for (size_t i = 0; i < diff.size(); ++i) {
    int a = i < xq.size() ? xq[i] : 0;
    int b = i < x.size() ? x[i] : 0;
    diff[i] = static_cast<int>(((a - b) % p + p) % p);
  }
  if (degree(diff) >= 0) return false;
  for (long r : prime_factors(m)) {
    Poly xd = frobenius_power(f, p, static_cast<int>(m / r));
    Poly d(std::max(xd.size(), x.size()), 0);
    for (size_t i = 0; i < d.size(); ++i) {
      int a = i < xd.size() ? xd[i] : 0;
      int b = i < x.size() ? x[i] : 0;
      d[i] = static_cast<int>(((a - b) % p + p) % p);
    }
    Poly g = poly_gcd(f, d, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

std::string poly_to_string(const Poly& f) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

int multiplicative_order(long p, long n) {
  if (n == 1) return 1;
  long x = p % n;
  long acc = x;
  for (int t = 1;; ++t) {
    if (acc == 1) return t;
    acc = acc * x % n;
    if (t > 2 * n) throw Error("multiplicative_order: p not coprime to n");
  }
}

FiniteField::FiniteField(long p, int m, std::optional<Coeffs> modulus_override)
    : p_(p), m_(m) {
  if (!is_prime(p)) throw NotPrime(p);
  if (m < 1) throw Error("m must be positive");

  pow_p_.resize(m + 1);
  pow_p_[0] = 1;
  for (int i = 1; i <= m; ++i) {
    pow_p_[i] = pow_p_[i - 1] * p;
    if (pow_p_[i] > (1L << 30)) throw SizeCap("FiniteField", 1L << 30);
  }
  q_ = pow_p_[m];

  if (modulus_override) {
    Poly f = *modulus_override;
    if (degree(f) != m || f[m] != 1) throw DegreeMismatch(m, degree(f));
    for (int& c : f) c = static_cast<int>(((c % p) + p) % p);
    if (!is_irreducible(f, p, m)) throw ReducibleModulus(poly_to_string(f));
    modulus_ = f;
    modulus_.resize(m + 1);
  } else {
    // Lexicographically smallest monic irreducible, coefficients compared
    // low-degree first: iterate with the constant term as the most
    // significant counter digit.
    bool found = false;
    std::vector<int> digits(m, 0);
    while (!found) {
      Poly f(m + 1, 0);
      f[m] = 1;
      for (int i = 0; i < m; ++i) f[i] = digits[i];
      if (is_irreducible(f, p, m)) {
        modulus_ = f;
        found = true;
        break;
      }
      // increment, last digit (highest degree coefficient) fastest
      int i = m - 1;
      while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    if (!found) throw Error("no irreducible modulus found");  // unreachable
  }

  q1_factors_ = prime_factors(q_ - 1);

  // Find omega: the generator with lexicographically smallest coefficient
  // vector. Uses raw polynomial arithmetic since no tables exist yet.
  auto idx_to_poly = [&](long idx) {
    Poly c(m_, 0);
    for (int i = 0; i < m_; ++i) {
      c[i] = static_cast<int>(idx % p_);
      idx /= p_;
    }
    return c;
  };
  std::vector<long> order;  // indices sorted by coefficient-vector lex order
  order.reserve(q_ - 1);
  for (long i = 1; i < q_; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    return idx_to_poly(a) < idx_to_poly(b);
  });
  long omega_found = -1;
  for (long cand : order) {
    Poly x = idx_to_poly(cand);
    bool gen = true;
    if (q_ > 2) {
      for (long r : q1_factors_) {
        Poly y = poly_powmod(x, (q_ - 1) / r, modulus_, p_);
        if (degree(y) == 0 && y[0] == 1) {
          gen = false;
          break;
        }
      }
    }
    if (gen) {
      omega_found = cand;
      break;
    }
  }
  omega_idx_ = omega_found;
  {
    Coeffs c = idx_to_poly(omega_found);
    omega_ = FieldElement(c);
  }

  // Build exp/log tables by walking powers of omega.
  if (q_ <= kLogTableCap) {
    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    Poly cur{1};
    cur.resize(m_, 0);
    Poly w = idx_to_poly(omega_idx_);
    for (long j = 0; j < q_ - 1; ++j) {
      long idx = 0;
      for (int i = m_ - 1; i >= 0; --i)
        idx = idx * p_ + (i < static_cast<int>(cur.size()) ? cur[i] : 0);
      exp_[j] = idx;
      log_[idx] = j;
      cur = poly_mulmod(cur, w, modulus_, p_);
    }
    for (long i = 1; i < q_; ++i)
      if (log_[i] < 0) throw InternalTheoremViolation("log table not a bijection");
  }

  // Trace table: Tr(x) = x + x^p + ... + x^{p^{m-1}}.
  trace_.assign(q_, 0);
  for (long i = 0; i < q_; ++i) {
    long s = 0;
    long conj = i;
    for (int t = 0; t < m_; ++t) {
      s = add(s, conj);
      conj = pow(conj, p_);
    }
    if (s >= p_) throw InternalTheoremViolation("trace not in prime field");
    trace_[i] = static_cast<int>(s);
  }
}

long FiniteField::index(const FieldElement& x) const {
  const Coeffs& c = x.coeffs();
  if (static_cast<int>(c.size()) != m_)
    throw Error("element has wrong coefficient count");
  long idx = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw Error("coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return idx;
}

FieldElement FiniteField::element(long idx) const {
  if (idx < 0 || idx >= q_) throw Error("index out of range");
  Coeffs c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  return FieldElement(c);
}

long FiniteField::add(long a, long b) const {
  if (p_ == 2) return a ^ b;
  long r = 0;
  for (int i = 0; i < m_; ++i) {
    long da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    long ds = da + db;
    if (ds >= p_) ds -= p_;
    r += ds * pow_p_[i];
  }
  return r;
}

long FiniteField::neg(long a) const {
  if (p_ == 2) return a;
  long r = 0;
  for (int i = 0; i < m_; ++i) {
    long da = a % p_;
    a /= p_;
    if (da != 0) r += (p_ - da) * pow_p_[i];
  }
  return r;
}

long FiniteField::sub(long a, long b) const { return add(a, neg(b)); }

long FiniteField::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    long e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  // Table-free path (q above the log table cap): schoolbook multiply of the
  // digit vectors, reduced by the modulus.
  std::vector<int> da(m_), db(m_);
  for (int i = 0; i < m_; ++i) {
    da[i] = static_cast<int>(a % p_);
    a /= p_;
    db[i] = static_cast<int>(b % p_);
    b /= p_;
  }
  Poly r = poly_mulmod(da, db, modulus_, p_);
  long idx = 0;
  for (int i = m_ - 1; i >= 0; --i)
    idx = idx * p_ + (i < static_cast<int>(r.size()) ? r[i] : 0);
  return idx;
}

long FiniteField::inv(long a) const {
  if (a == 0) throw Error("inverse of zero");
  if (!log_.empty()) {
    long e = log_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
  }
  return pow(a, q_ - 2);
}

long FiniteField::pow(long base, long long e) const {
  if (base == 0) {
    if (e == 0) return 1;  // 0^0 = 1 by convention
    if (e < 0) throw Error("negative power of zero");
    return 0;
  }
  long long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  if (!log_.empty()) {
    long long t = static_cast<long long>(log_[base]) * r % (q_ - 1);
    return exp_[t];
  }
  long acc = 1, cur = base;
  while (r > 0) {
    if (r & 1) acc = mul(acc, cur);
    cur = mul(cur, cur);
    r >>= 1;
  }
  return acc;
}

long FiniteField::omega_pow(long long e) const {
  long long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  if (!exp_.empty()) return exp_[r];
  return pow(omega_idx_, r);
}

long FiniteField::discrete_log(long a) const {
  if (a == 0) throw LogOfZero();
  if (!log_.empty()) return log_[a];
  return bsgs_log(a);
}

long FiniteField::bsgs_log(long a) const {
  // Baby-step/giant-step, only used above the table cap.
  long n = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(q_ - 1))));
  std::map<long, long> baby;
  long cur = 1;
  for (long j = 0; j < n; ++j) {
    baby.emplace(cur, j);
    cur = mul(cur, omega_idx_);
  }
  long factor = inv(cur);  // omega^{-n}
  long gamma = a;
  for (long i = 0; i < n + 1; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * n + it->second) % (q_ - 1);
    gamma = mul(gamma, factor);
  }
  throw Error("bsgs: log not found");
}

int FiniteField::trace(long a) const { return trace_[a]; }

FieldElement FiniteField::add(const FieldElement& x,
                              const FieldElement& y) const {
  return element(add(index(x), index(y)));
}
FieldElement FiniteField::mul(const FieldElement& x,
                              const FieldElement& y) const {
  return element(mul(index(x), index(y)));
}
FieldElement FiniteField::neg(const FieldElement& x) const {
  return element(neg(index(x)));
}
FieldElement FiniteField::pow(const FieldElement& x, long long e) const {
  return element(pow(index(x), e));
}
long FiniteField::discrete_log(const FieldElement& x) const {
  return discrete_log(index(x));
}
int FiniteField::trace(const FieldElement& x) const {
  return trace(index(x));
}

SubfieldDescriptor FiniteField::subfield(int a) const {
  if (a < 1 || m_ % a != 0) throw NotADivisor(a, m_);
  SubfieldDescriptor d;
  d.a = a;
  long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p_;
  long alpha = omega_pow((q_ - 1) / (pa - 1));
  d.alpha = element(alpha);

  // Frobenius fixed points: x^{p^a} = x.
  std::vector<long> fixed;
  for (long i = 0; i < q_; ++i)
    if (pow(i, pa) == i) fixed.push_back(i);

  // {0} union <alpha>
  std::vector<long> span{0};
  long cur = alpha;
  do {
    span.push_back(cur);
    cur = mul(cur, alpha);
  } while (cur != alpha);
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());

  if (fixed != span)
    throw InternalTheoremViolation(
        "subfield: Frobenius fixed points != {0} u <alpha>");
  if (static_cast<long>(fixed.size()) != pa)
    throw InternalTheoremViolation("subfield: wrong cardinality");

  d.element_indices = fixed;
  d.elements.reserve(fixed.size());
  for (long i : fixed) d.elements.push_back(element(i));
  return d;
}

std::string FiniteField::poly_label(long idx) const {
  if (idx == 0) return "0";
  std::ostringstream os;
  bool first = true;
  Coeffs c = element(idx).coeffs();
  for (int i = m_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] > 1) os << c[i];
    if (i >= 1) os << "a";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string FiniteField::poly_label(const FieldElement& x) const {
  return poly_label(index(x));
}

std::string FiniteField::descriptor_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"m\":" << m_ << ",\"modulus\":[";
  for (int i = 0; i <= m_; ++i) os << (i ? "," : "") << modulus_[i];
  os << "],\"omega\":[";
  for (int i = 0; i < m_; ++i) os << (i ? "," : "") << omega_.coeffs()[i];
  os << "]}";
  return os.str();
}

FieldEmbedding::FieldEmbedding(const FiniteField& small, const FiniteField& big)
    : small_(&small), big_(&big) {
  if (small.p() != big.p())
    throw IncompatibleFields("different characteristic");
  if (big.m() % small.m() != 0)
    throw IncompatibleFields("subfield degree does not divide");
  const int a = small.m();
  const long p = small.p();

  SubfieldDescriptor sub = big.subfield(a);
  long alpha = big.index(sub.alpha);

  // Roots of the small field's modulus inside F_a <= F_q. Each root beta
  // yields the genuine embedding sum c_i x^i  ->  sum c_i beta^i.
  auto eval_modulus = [&](long beta) {
    long acc = 0;
    long pw = 1;  // beta^i
    for (int i = 0; i <= a; ++i) {
      long term = pw;
      long coef = small.modulus()[i] % p;
      // coef * pw via repeated addition in the prime field scalar sense
      long scaled = 0;
      for (long c = 0; c < coef; ++c) scaled = big.add(scaled, term);
      acc = big.add(acc, scaled);
      if (i < a) pw = big.mul(pw, beta);
    }
    return acc;
  };
  std::vector<long> roots;
  if (a == 1) {
    // For the prime subfield the embedding c -> c*1 is unique and does not
    // depend on a root choice.
    roots.assign({0});
  } else {
    for (long beta : sub.element_indices)
      if (eval_modulus(beta) == 0) roots.push_back(beta);
    if (roots.empty())
      throw InternalTheoremViolation("embedding: modulus has no root in F_a");
  }

  auto build = [&](long beta) {
    std::vector<long> img(small.q());
    for (long i = 0; i < small.q(); ++i) {
      Coeffs c = small.element(i).coeffs();
      long acc = 0;
      long pw = 1;
      for (int d = 0; d < a; ++d) {
        long scaled = 0;
        for (int t = 0; t < c[d]; ++t) scaled = big.add(scaled, pw);
        acc = big.add(acc, scaled);
        if (d + 1 < a) pw = big.mul(pw, beta);
      }
      img[i] = acc;
    }
    return img;
  };

  long omega_small = small.omega_index();
  std::vector<long> best;
  bool have_alpha_match = false;
  std::sort(roots.begin(), roots.end());
  for (long beta : roots) {
    std::vector<long> img = build(beta);
    if (img[omega_small] == alpha) {
      best = std::move(img);
      have_alpha_match = true;
      break;
    }
    if (best.empty()) best = std::move(img);
  }
  (void)have_alpha_match;
  image_ = std::move(best);

  if (image_[0] != 0) throw InternalTheoremViolation("embedding: psi(0) != 0");
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
  return big_->element(image_[small_->index(x)]);
}

}  // namespace gp
