#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "gp/decompose.hpp"
#include "gp/errors.hpp"
#include "gp/spectra.hpp"

using namespace gp;

namespace {
GPGraph make(long p, int m, long k) {
  return GPGraph(std::make_shared<FiniteField>(p, m), k);
}

bool has_entry(const Spectrum& s, std::complex<double> v, long mult,
               double tol = 1e-9) {
  for (const auto& e : s.entries)
    if (std::abs(e.value - v) < tol && e.multiplicity == mult) return true;
  return false;
}
}  // namespace

TEST_CASE("complete graph spectrum") {
  auto s = character_spectrum(make(5, 1, 1));
  REQUIRE(s.entries.size() == 2);
  CHECK(has_entry(s, {4, 0}, 1));
  CHECK(has_entry(s, {-1, 0}, 4));
}

TEST_CASE("matching spectrum G(2^m-1, 2^m)") {
  for (int m : {1, 2, 3, 4}) {
    auto s = character_spectrum(make(2, m, (1L << m) - 1));
    long half = 1L << (m - 1);
    CHECK(has_entry(s, {1, 0}, half));
    CHECK(has_entry(s, {-1, 0}, half));
  }
}

TEST_CASE("directed triangle union G(8,9)") {
  auto s = character_spectrum(make(3, 2, 8));
  const double c = std::cos(2 * std::numbers::pi / 3);
  const double t = std::sin(2 * std::numbers::pi / 3);
  CHECK(has_entry(s, {1, 0}, 3));
  CHECK(has_entry(s, {c, t}, 3));
  CHECK(has_entry(s, {c, -t}, 3));
}

TEST_CASE("multiplicity scaling") {
  for (auto [p, m, k] : {std::tuple<long, int, long>{3, 2, 4}, {3, 4, 20},
                         {2, 8, 51}, {5, 2, 6}, {3, 2, 1}}) {
    auto g = make(p, m, k);
    CHECK(verify_multiplicity_scaling(g, decompose(g)));
  }
}

TEST_CASE("G(4,9) = 3K_3 spectrum {2^3, -1^6}") {
  auto s = character_spectrum(make(3, 2, 4));
  REQUIRE(s.entries.size() == 2);
  CHECK(has_entry(s, {2, 0}, 3));
  CHECK(has_entry(s, {-1, 0}, 6));
}

TEST_CASE("spectral radius equals degree") {
  CHECK(spectral_radius(character_spectrum(make(3, 2, 1))) == doctest::Approx(8));
  CHECK(spectral_radius(character_spectrum(make(3, 2, 2))) == doctest::Approx(4));
  CHECK(spectral_radius(character_spectrum(make(3, 3, 26))) == doctest::Approx(1));
}

TEST_CASE("symmetry tests B1/B2") {
  auto bip = spectrum_symmetry_tests(character_spectrum(make(2, 3, 7)), 1);
  CHECK(bip.b1);
  CHECK(bip.b2);

  auto k3 = spectrum_symmetry_tests(character_spectrum(make(3, 1, 1)), 2);
  CHECK(!k3.b1);
  CHECK(!k3.b2);

  auto clebsch = spectrum_symmetry_tests(character_spectrum(make(2, 4, 3)), 5);
  CHECK(!clebsch.b1);
}

TEST_CASE("real part relation") {
  for (auto [p, m] : {std::pair<long, int>{3, 3}, {3, 1}, {5, 2}}) {
    auto f = std::make_shared<FiniteField>(p, m);
    GPGraph g(f, f->q() - 1), g_half(f, (f->q() - 1) / 2);
    CHECK(real_part_relation(g_half, g));
  }
  // precondition: g must be directed with even k
  auto f = std::make_shared<FiniteField>(3, 2);
  CHECK_THROWS_AS(real_part_relation(GPGraph(f, 2), GPGraph(f, 4)),
                  PreconditionViolated);
}

TEST_CASE("character vs numeric oracle") {
  for (auto [p, m, k] : {std::tuple<long, int, long>{3, 2, 8}, {3, 4, 8},
                         {5, 2, 4}, {2, 4, 3}, {7, 2, 16}}) {
    auto cs = character_spectrum(make(p, m, k));
    auto ns = numeric_spectrum(make(p, m, k));
    REQUIRE(cs.entries.size() == ns.entries.size());
    for (size_t i = 0; i < cs.entries.size(); ++i) {
      CHECK(std::abs(cs.entries[i].value - ns.entries[i].value) < 1e-6);
      CHECK(cs.entries[i].multiplicity == ns.entries[i].multiplicity);
    }
  }
}

TEST_CASE("spectrum bookkeeping invariants") {
  for (auto [p, m, k] : {std::tuple<long, int, long>{3, 2, 2}, {7, 2, 12}, {2, 6, 21}}) {
    auto g = make(p, m, k);
    auto s = character_spectrum(g);
    CHECK(s.order() == g.q());
    std::complex<double> tr{0, 0};
    long mult_n = 0;
    for (const auto& e : s.entries) {
      tr += e.value * static_cast<double>(e.multiplicity);
      if (std::abs(e.value - std::complex<double>(g.n(), 0)) < 1e-9)
        mult_n = e.multiplicity;
    }
    CHECK(std::abs(tr) < 1e-7);
    CHECK(mult_n == decompose(g).params.component_count);
  }
}

TEST_CASE("serialization") {
  auto s = character_spectrum(make(3, 1, 1));
  CHECK(s.to_json().find("character_sum") != std::string::npos);
  CHECK(s.to_csv().find("re,im,mult") != std::string::npos);
}
