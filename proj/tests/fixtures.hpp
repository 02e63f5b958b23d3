#pragma once

#include <random>
#include <string>
#include <vector>

#include "pathdet/digraph.hpp"
#include "pathdet/path_matrix.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet::testing {

// Four vertices, three colors: 1->2 in colors 1 and 2, 2->3 and 2->4 in color 1.
inline ColoredDigraph sample_graph() {
  return ColoredDigraph::validate({4, 3, {{1, 2, {1, 2}}, {2, 3, {1}}, {2, 4, {1}}}});
}

// Determinant of the sample matrix, term by term in the order it is
// printed in the worked example (not canonical order).
inline const char* const kSampleDetAsPrinted =
    "1 + x1_1 + x1_2 + x1_3 + x2_1 + x2_2 + x2_3 + x3_1 + x3_2 + x3_3 + x4_1 + x4_2 + x4_3"
    " + x1_1*x2_1 + x1_1*x2_2 + x1_1*x2_3 + x1_2*x2_1 + x1_2*x2_2 + x1_2*x2_3"
    " + x2_1*x3_1 + x2_1*x3_2 + x2_1*x3_3 + x2_1*x4_1 + x2_1*x4_2 + x2_1*x4_3"
    " + x1_1*x2_1*x3_1 + x1_1*x2_1*x3_2 + x1_1*x2_1*x3_3 + x1_2*x2_1*x3_1"
    " + x1_2*x2_1*x3_2 + x1_2*x2_1*x3_3 + x1_1*x2_1*x4_1 + x1_1*x2_1*x4_2 + x1_1*x2_1*x4_3"
    " + x1_2*x2_1*x4_1 + x1_2*x2_1*x4_2 + x1_2*x2_1*x4_3";

// The same polynomial in canonical (graded lex) text form.
inline const char* const kSampleDetCanonical =
    "1 + x1_1 + x1_2 + x1_3 + x2_1 + x2_2 + x2_3 + x3_1 + x3_2 + x3_3 + x4_1 + x4_2 + x4_3"
    " + x1_1*x2_1 + x1_1*x2_2 + x1_1*x2_3 + x1_2*x2_1 + x1_2*x2_2 + x1_2*x2_3"
    " + x2_1*x3_1 + x2_1*x3_2 + x2_1*x3_3 + x2_1*x4_1 + x2_1*x4_2 + x2_1*x4_3"
    " + x1_1*x2_1*x3_1 + x1_1*x2_1*x3_2 + x1_1*x2_1*x3_3 + x1_1*x2_1*x4_1"
    " + x1_1*x2_1*x4_2 + x1_1*x2_1*x4_3 + x1_2*x2_1*x3_1 + x1_2*x2_1*x3_2"
    " + x1_2*x2_1*x3_3 + x1_2*x2_1*x4_1 + x1_2*x2_1*x4_2 + x1_2*x2_1*x4_3";

inline Polynomial x(Vertex v, Color c) { return Polynomial(Variable{v, c}); }

// Random polynomial: up to `max_terms` terms, coefficients in [-9, 9],
// variables x{1..vertices}_{1..colors}, exponents up to 2.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 8, Vertex vertices = 3,
                                    Color colors = 2) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> factor_count(0, 3);
  std::uniform_int_distribution<Vertex> vertex(1, vertices);
  std::uniform_int_distribution<Color> color(1, colors);
  std::uniform_int_distribution<std::uint32_t> exponent(1, 2);
  std::vector<Term> terms;
  for (int t = term_count(rng); t > 0; --t) {
    std::vector<Factor> fs;
    for (int f = factor_count(rng); f > 0; --f) {
      fs.push_back({Variable{vertex(rng), color(rng)}, exponent(rng)});
    }
    terms.push_back({Monomial::from_factors(std::move(fs)), Integer(coeff(rng))});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::uint32_t n, int max_terms = 3) {
  PolyMatrix m(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) m(i, j) = random_polynomial(rng, max_terms, 4, 2);
  }
  return m;
}

}  // namespace pathdet::testing
