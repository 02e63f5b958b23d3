#include "doctest.h"
#include "fixtures.hpp"
#include "pathdet/path_matrix.hpp"

using namespace pathdet;
using pathdet::testing::sample_graph;
using pathdet::testing::x;

TEST_CASE("sample matrix") {
  PolyMatrix m = build_colored_matrix(sample_graph());
  Polynomial row[5];
  for (Vertex i = 1; i <= 4; ++i) row[i] = x(i, 1) + x(i, 2) + x(i, 3);

  CHECK(m(1, 1) == Polynomial(1) + row[1]);
  CHECK(m(1, 2) == x(1, 3));
  CHECK(m(1, 3) == row[1]);
  CHECK(m(1, 4) == row[1]);
  CHECK(m(2, 3) == x(2, 2) + x(2, 3));
  CHECK(m(2, 4) == x(2, 2) + x(2, 3));
  CHECK(m(3, 4) == row[3]);
  for (Vertex i = 1; i <= 4; ++i) {
    CHECK(m(i, i) == Polynomial(1) + row[i]);
    for (Vertex j = 1; j < i; ++j) CHECK(m(i, j) == row[i]);
  }
  CHECK(to_json(m)[0][1] == "x1_3");
}

TEST_CASE("small matrices") {
  PolyMatrix m = build_colored_matrix(ColoredDigraph::validate({2, 1, {}}));
  CHECK(m(1, 1) == Polynomial(1) + x(1, 1));
  CHECK(m(1, 2) == x(1, 1));
  CHECK(m(2, 1) == x(2, 1));
  CHECK(m(2, 2) == Polynomial(1) + x(2, 1));

  PolyMatrix full = build_colored_matrix(ColoredDigraph::validate({2, 2, {{1, 2, {1, 2}}}}));
  CHECK(full(1, 2).is_zero());
  CHECK(build_colored_matrix(ColoredDigraph::validate({0, 1, {}})).n() == 0);
  CHECK_THROWS_AS(m(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m(1, 3), std::out_of_range);
}

TEST_CASE("single-color matrix") {
  PolyMatrix with_edge = build_stanley_matrix(ColoredDigraph::validate({2, 1, {{1, 2, {1}}}}));
  CHECK(with_edge(1, 1) == Polynomial(1) + x(1, 1));
  CHECK(with_edge(1, 2).is_zero());
  CHECK(with_edge(2, 1) == x(2, 1));
  CHECK(with_edge(2, 2) == Polynomial(1) + x(2, 1));

  PolyMatrix no_edge = build_stanley_matrix(ColoredDigraph::validate({2, 1, {}}));
  CHECK(no_edge(1, 2) == x(1, 1));

  CHECK_THROWS_AS(build_stanley_matrix(sample_graph()), PreconditionError);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = ColoredDigraph::random(1 + seed % 7, 1, 0.5, seed);
    CHECK(build_stanley_matrix(g) == build_colored_matrix(g));
  }
}

TEST_CASE("term counts and row variables") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    std::uint32_t n = 1 + seed % 7;
    std::uint32_t k = 1 + seed % 3;
    double density = (seed % 4) / 3.0;
    auto g = ColoredDigraph::random(n, k, density, seed);
    PolyMatrix m = build_colored_matrix(g);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        const Polynomial& a = m(i, j);
        CHECK(a.is_canonical());
        if (i == j) {
          CHECK(a.size() == k + 1);
        } else if (i > j) {
          CHECK(a.size() == k);
        } else {
          CHECK(a.size() == k - g.colors(i, j).size());
        }
        for (const Term& t : a.terms()) {
          for (const Factor& f : t.monomial.factors()) CHECK(f.var.vertex() == i);
        }
      }
    }
  }
}

TEST_CASE("grid rendering") {
  PolyMatrix m = build_colored_matrix(ColoredDigraph::validate({2, 1, {{1, 2, {1}}}}));
  CHECK(format_grid(m) == "1 + x1_1 | 0\nx2_1     | 1 + x2_1\n");
  CHECK(m.transposed()(2, 1).is_zero());
}
