#include <doctest.h>

#include <cmath>
#include <memory>

#include "gp/errors.hpp"
#include "gp/gp_graph.hpp"
#include "gp/oracle.hpp"

using namespace gp;
using namespace gp::oracle;

namespace {
GPGraph make(long p, int m, long k) {
  return GPGraph(std::make_shared<FiniteField>(p, m), k);
}

DenseGraph cycle(long n, bool directed) {
  DenseGraph g(n, directed);
  for (long i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}
}  // namespace

TEST_CASE("components") {
  CHECK(components(DenseGraph(make(2, 3, 7)), ComponentMode::weak).size() == 4);
  CHECK(components(complete_graph(9), ComponentMode::weak).size() == 1);
  CHECK(components(DenseGraph(make(3, 4, 16)), ComponentMode::strong).size() == 1);
  // directed cycle: one strong component, also one weak
  auto c5 = cycle(5, true);
  CHECK(components(c5, ComponentMode::strong).size() == 1);
  CHECK(components(c5, ComponentMode::weak).size() == 1);
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(9)) == 1);
  CHECK(diameter(cycle(7, false)) == 3);
  CHECK(diameter(cycle(7, true)) == 6);
  CHECK(!diameter(DenseGraph(make(2, 3, 7))).has_value());
}

TEST_CASE("two coloring") {
  auto tc = two_coloring(DenseGraph(make(2, 2, 3)));  // 2K_2
  REQUIRE(tc.bipartition.has_value());

  auto odd = two_coloring(cycle(5, false));
  CHECK(!odd.bipartition.has_value());
  REQUIRE(odd.odd_closed_walk.size() % 2 == 1);
  // walk validity on C_5
  const auto& w = odd.odd_closed_walk;
  auto c5 = cycle(5, false);
  for (size_t i = 0; i < w.size(); ++i) {
    long u = w[i], v = w[(i + 1) % w.size()];
    CHECK((c5.arc(u, v) || c5.arc(v, u)));
  }
}

TEST_CASE("numeric eigenvalues of K_3") {
  auto ev = numeric_eigenvalues(complete_graph(3));
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0] - std::complex<double>(2, 0)) < 1e-9);
  CHECK(std::abs(ev[1] - std::complex<double>(-1, 0)) < 1e-9);
  CHECK(std::abs(ev[2] - std::complex<double>(-1, 0)) < 1e-9);
}

TEST_CASE("directed eigenvalues are roots of unity for ->C_3") {
  auto ev = numeric_eigenvalues(cycle(3, true));
  REQUIRE(ev.size() == 3);
  for (const auto& l : ev) CHECK(std::abs(std::abs(l) - 1.0) < 1e-9);
}

TEST_CASE("cartesian products") {
  auto c4 = cartesian_product(complete_graph(2), complete_graph(2));
  REQUIRE(isomorphic(c4, cycle(4, false)).has_value());

  auto h34 = hamming_graph(3, 4);
  CHECK(h34.order() == 64);
  for (long v = 0; v < 64; ++v) CHECK(h34.out_degree(v) == 9);

  CHECK_THROWS_AS(cartesian_product(cycle(3, true), complete_graph(2)),
                  DirectedInput);
}

TEST_CASE("prism is not the 6-cycle") {
  auto prism = cartesian_product(complete_graph(2), complete_graph(3));
  CHECK(!isomorphic(prism, cycle(6, false)).has_value());
}

TEST_CASE("rook graph isomorphism G(5,81)") {
  auto g = DenseGraph(make(3, 4, 5));
  auto rook = cartesian_product(complete_graph(9), complete_graph(9));
  auto phi = isomorphic(g, rook);
  REQUIRE(phi.has_value());
  // certified: spot-check anyway
  for (long u = 0; u < 81; ++u)
    for (long v = 0; v < 81; ++v) CHECK(g.arc(u, v) == rook.arc((*phi)[u], (*phi)[v]));
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(isomorphic(complete_graph(300), complete_graph(300)), SizeCap);
  CHECK_THROWS_AS(numeric_eigenvalues(complete_graph(600)), OrderCap);
}

TEST_CASE("self loops rejected") {
  DenseGraph g(3, false);
  CHECK_THROWS_AS(g.add_arc(1, 1), PreconditionViolated);
}
