#include <chrono>

#include "doctest.h"
#include "fixtures.hpp"
#include "pathdet/determinant.hpp"
#include "pathdet/linear_subdigraph.hpp"

using namespace pathdet;
using pathdet::testing::sample_graph;
using pathdet::testing::kSampleDetAsPrinted;
using pathdet::testing::kSampleDetCanonical;
using pathdet::testing::random_matrix;
using pathdet::testing::x;

TEST_CASE("trivial sizes") {
  PolyMatrix empty(0);
  CHECK(det_leibniz(empty) == Polynomial(1));
  CHECK(det_division_free(empty) == Polynomial(1));
  CHECK(det_via_linear_subdigraphs(empty) == Polynomial(1));

  PolyMatrix one(1);
  one(1, 1) = Polynomial(1) + x(1, 2);
  CHECK(det_leibniz(one) == one(1, 1));
  CHECK(det_division_free(one) == one(1, 1));

  PolyMatrix two(2);
  two(1, 1) = x(1, 1);
  two(1, 2) = x(1, 2);
  two(2, 1) = x(2, 1);
  two(2, 2) = x(2, 2);
  Polynomial expected = x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1);
  CHECK(det_leibniz(two) == expected);
  CHECK(det_division_free(two) == expected);
}

TEST_CASE("sample determinant, all routes") {
  PolyMatrix m = build_colored_matrix(sample_graph());
  auto start = std::chrono::steady_clock::now();
  Polynomial leibniz = det_leibniz(m);
  Polynomial division_free = det_division_free(m);
  Polynomial lsd = det_via_linear_subdigraphs(m);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  CHECK(leibniz.size() == 37);
  CHECK(leibniz == parse_polynomial(kSampleDetAsPrinted));
  CHECK(format(leibniz) == kSampleDetCanonical);
  CHECK(format(division_free) == kSampleDetCanonical);
  CHECK(format(lsd) == kSampleDetCanonical);
  CHECK(seconds < 1.0);
}

TEST_CASE("division-free agrees with the permutation expansion") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 220; ++i) {
    std::uint32_t n = 1 + i % 6;
    PolyMatrix m = random_matrix(rng, n, n <= 4 ? 3 : 2);
    Polynomial expected = det_leibniz(m);
    CHECK(det_division_free(m) == expected);
    if (n <= 4) CHECK(det_via_linear_subdigraphs(m) == expected);
  }
}

TEST_CASE("determinant identities") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    std::uint32_t n = 2 + i % 4;
    PolyMatrix m = random_matrix(rng, n, 2);
    Polynomial d = det_division_free(m);
    CHECK(det_division_free(m.transposed()) == d);

    PolyMatrix doubled = m;
    for (std::uint32_t j = 1; j <= n; ++j) doubled(1, j) *= Polynomial(2);
    CHECK(det_division_free(doubled) == Polynomial(2) * d);

    PolyMatrix swapped = m;
    for (std::uint32_t j = 1; j <= n; ++j) std::swap(swapped(1, j), swapped(2, j));
    CHECK(det_division_free(swapped) == -d);

    PolyMatrix repeated = m;
    for (std::uint32_t j = 1; j <= n; ++j) repeated(2, j) = repeated(1, j);
    CHECK(det_division_free(repeated).is_zero());
  }
}

TEST_CASE("all colors present gives a lower-triangular matrix") {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    auto g = ColoredDigraph::random(n, 2, 1.0, 0);
    PolyMatrix m = build_colored_matrix(g);
    Polynomial product(1);
    for (Vertex i = 1; i <= n; ++i) product *= m(i, i);
    CHECK(det_division_free(m) == product);
  }
}

TEST_CASE("resource bounds") {
  PolyMatrix m = build_colored_matrix(ColoredDigraph::random(9, 1, 0.5, 1));
  try {
    det_leibniz(m);
    FAIL("expected a bound error");
  } catch (const ResourceBoundError& e) {
    CHECK(e.bound() == "oracle-n");
    CHECK(e.limit() == 8);
    CHECK(e.actual() == 9);
  }
  CHECK_THROWS_AS(det_via_linear_subdigraphs(m), ResourceBoundError);
  CHECK_NOTHROW(det_leibniz(build_colored_matrix(sample_graph()), 4));
  CHECK_THROWS_AS(det_leibniz(build_colored_matrix(sample_graph()), 3), ResourceBoundError);

  try {
    det_division_free(build_colored_matrix(sample_graph()), 10);
    FAIL("expected a bound error");
  } catch (const ResourceBoundError& e) {
    CHECK(e.bound() == "term-ceiling");
    CHECK(e.limit() == 10);
  }

  DivisionFreeStats stats;
  det_division_free(m, kDefaultTermCeiling, &stats);
  CHECK(stats.peak_layer_terms >= stats.peak_state_terms);
  CHECK(stats.peak_state_terms > 0);
}

TEST_CASE("coefficients beyond 64 bits") {
  Integer big("1000000000000000000000");
  PolyMatrix m(2);
  m(1, 1) = Polynomial(Monomial(Variable{1, 1}), big);
  m(1, 2) = Polynomial(Integer(3));
  m(2, 1) = x(2, 1);
  m(2, 2) = Polynomial(Monomial(Variable{2, 2}), big);
  Polynomial expected = m(1, 1) * m(2, 2) - Polynomial(3) * x(2, 1);
  CHECK(det_leibniz(m) == expected);
  CHECK(det_division_free(m) == expected);
  CHECK(det_via_linear_subdigraphs(m) == expected);

  // fits on input, overflows once multiplied
  Integer half_max("4000000000000000000");
  PolyMatrix n(2);
  n(1, 1) = Polynomial(half_max);
  n(2, 2) = Polynomial(half_max);
  n(1, 2) = x(1, 1);
  n(2, 1) = x(2, 1);
  Polynomial product = Polynomial(half_max) * Polynomial(half_max) - x(1, 1) * x(2, 1);
  CHECK(det_leibniz(n) == product);
  CHECK(det_division_free(n) == product);
  CHECK(det_via_linear_subdigraphs(n) == product);
}

TEST_CASE("many variables and large exponents") {
  // 16 entries x 6 private variables is too many for a packed key
  PolyMatrix m(4);
  Color next = 1;
  for (Vertex i = 1; i <= 4; ++i) {
    for (Vertex j = 1; j <= 4; ++j) {
      Polynomial e(i == j ? 2 : 1);
      for (int f = 0; f < 6; ++f) e *= x(i, next++);
      m(i, j) = e + Polynomial(i + j);
    }
  }
  Polynomial d = det_division_free(m);
  CHECK(d.size() > 0);
  CHECK(det_leibniz(m) == d);
  CHECK(det_via_linear_subdigraphs(m) == d);

  PolyMatrix powers(2);
  powers(1, 1) = Polynomial(Monomial::from_factors({{Variable{1, 1}, 4'000'000'000u}}), Integer(1));
  powers(2, 2) = Polynomial(1) + x(2, 1);
  powers(1, 2) = x(1, 2);
  powers(2, 1) = x(2, 1);
  Polynomial expected = powers(1, 1) * powers(2, 2) - x(1, 2) * x(2, 1);
  CHECK(det_leibniz(powers) == expected);
  CHECK(det_division_free(powers) == expected);
}
