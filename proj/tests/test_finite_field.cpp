#include <doctest.h>

#include <algorithm>
#include <set>

#include "gp/errors.hpp"
#include "gp/finite_field.hpp"

using namespace gp;

TEST_CASE("default modulus of GF(9) is x^2+1") {
  FiniteField f(3, 2);
  // modulus coefficients live in the descriptor JSON; check via arithmetic:
  // alpha^2 = -1 = 2 iff the modulus is x^2+1.
  FieldElement alpha({0, 1});
  CHECK(f.element(f.mul(f.index(alpha), f.index(alpha))) == FieldElement({2, 0}));
  CHECK(f.descriptor_json().find("\"modulus\":[1,0,1]") != std::string::npos);
}

TEST_CASE("prime field GF(2)") {
  FiniteField f(2, 1);
  CHECK(f.q() == 2);
  CHECK(f.omega_index() == 1);  // omega = 1
  CHECK(f.add(1, 1) == 0);
}

TEST_CASE("override modulus accepted and validated") {
  FiniteField f(2, 4, Coeffs{1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(f.q() == 16);
  CHECK_THROWS_AS(FiniteField(2, 4, Coeffs{1, 0, 0, 0, 1}), ReducibleModulus);
  CHECK_THROWS_AS(FiniteField(2, 4, Coeffs{1, 1, 1}), DegreeMismatch);
  CHECK_THROWS_AS(FiniteField(4, 2), NotPrime);
}

TEST_CASE("multiplication and powers in GF(8)") {
  FiniteField f(2, 3, Coeffs{1, 1, 0, 1});  // x^3 + x + 1
  for (long x = 1; x < 8; ++x) CHECK(f.pow(x, 7) == f.index(FieldElement({1, 0, 0})));
  for (long x = 0; x < 8; ++x) CHECK(f.mul(x, 1) == x);
}

TEST_CASE("discrete log") {
  FiniteField f(3, 2);
  CHECK(f.discrete_log(f.omega_index()) == 1);
  CHECK(f.discrete_log(1) == 0);  // index 1 is the element 1
  CHECK_THROWS_AS(f.discrete_log(0), LogOfZero);
  for (long x = 1; x < 9; ++x) CHECK(f.omega_pow(f.discrete_log(x)) == x);
}

TEST_CASE("trace") {
  FiniteField f4(2, 2);
  CHECK(f4.trace(FieldElement({0, 0})) == 0);
  CHECK(f4.trace(FieldElement({0, 1})) == 1);  // alpha + alpha^2 = 1

  FiniteField f8(2, 3);
  for (long x = 0; x < 8; ++x)
    for (long y = 0; y < 8; ++y)
      CHECK((f8.trace(x) + f8.trace(y)) % 2 == f8.trace(f8.add(x, y)));
}

TEST_CASE("subfields") {
  FiniteField f8(2, 3);
  auto s1 = f8.subfield(1);
  CHECK(s1.element_indices == std::vector<long>{0, 1});

  FiniteField f81(3, 4);
  auto s2 = f81.subfield(2);
  CHECK(s2.elements.size() == 9);
  std::set<long> idx(s2.element_indices.begin(), s2.element_indices.end());
  for (long x : s2.element_indices)
    for (long y : s2.element_indices) {
      CHECK(idx.count(f81.mul(x, y)) == 1);
      CHECK(idx.count(f81.add(x, y)) == 1);
    }
  auto sm = f81.subfield(4);
  CHECK(sm.elements.size() == 81);
  CHECK_THROWS_AS(f81.subfield(3), NotADivisor);
}

TEST_CASE("psi embedding") {
  FiniteField f3(3, 1);
  FiniteField f81(3, 4);
  FieldEmbedding psi(f3, f81);
  CHECK(psi.map_index(0) == 0);
  CHECK(psi.map_index(f3.index(FieldElement({1}))) ==
        f81.index(FieldElement({1, 0, 0, 0})));
  auto s1 = f81.subfield(1);
  std::set<long> image, expect(s1.element_indices.begin(), s1.element_indices.end());
  for (long x = 0; x < 3; ++x) image.insert(psi.map_index(x));
  CHECK(image == expect);
}

TEST_CASE("psi additivity for small towers") {
  const std::pair<std::pair<long, int>, std::pair<long, int>> cases[] = {
      {{2, 2}, {2, 4}}, {{2, 2}, {2, 6}}, {{3, 1}, {3, 2}},
      {{3, 2}, {3, 4}}, {{2, 4}, {2, 8}}, {{5, 1}, {5, 2}}};
  for (auto [sm, bg] : cases) {
    FiniteField small(sm.first, sm.second);
    FiniteField big(bg.first, bg.second);
    FieldEmbedding psi(small, big);
    for (long x = 0; x < small.q(); ++x)
      for (long y = 0; y < small.q(); ++y) {
        CHECK(psi.map_index(small.add(x, y)) ==
              big.add(psi.map_index(x), psi.map_index(y)));
        CHECK(psi.map_index(small.mul(x, y)) ==
              big.mul(psi.map_index(x), psi.map_index(y)));
      }
  }
}

TEST_CASE("unit group order") {
  for (auto [p, m] : {std::pair<long, int>{2, 5}, {3, 3}, {5, 2}, {31, 1}}) {
    FiniteField f(p, m);
    for (long x = 1; x < f.q(); ++x) CHECK(f.pow(x, f.q() - 1) == 1);
  }
}

TEST_CASE("inverse") {
  FiniteField f(7, 2);
  for (long x = 1; x < 49; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
}

TEST_CASE("utility number theory") {
  CHECK(is_prime(2));
  CHECK(is_prime(1021));
  CHECK(!is_prime(1));
  CHECK(!is_prime(1023));
  CHECK(prime_factors(80) == std::vector<long>{2, 5});
  CHECK(multiplicative_order(3, 4) == 2);
  CHECK(multiplicative_order(2, 5) == 4);
}
