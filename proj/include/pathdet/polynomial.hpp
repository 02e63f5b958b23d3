#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace pathdet {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Vertex = std::uint32_t;
using Color = std::uint32_t;

// The indeterminate x_v^{(c)}. Ordered lexicographically by (vertex, color);
// that order drives every canonical form in the library.
class Variable {
 public:
  Variable(Vertex vertex, Color color) : vertex_(vertex), color_(color) {
    if (vertex == 0 || color == 0) {
      throw std::invalid_argument("variable indices are 1-based");
    }
  }

  Vertex vertex() const { return vertex_; }
  Color color() const { return color_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  Vertex vertex_;
  Color color_;
};

struct Factor {
  Variable var;
  std::uint32_t exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Power product of variables. Factors are kept strictly increasing in
// variable order with positive exponents; no factors means the monomial 1.
class Monomial {
 public:
  using Factors = boost::container::small_vector<Factor, 8>;

  Monomial() = default;
  explicit Monomial(Variable v) { factors_.push_back({v, 1}); }

  // Sorts and merges arbitrary factors; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const Factors& factors() const { return factors_; }
  std::uint64_t degree() const;
  bool is_one() const { return factors_.empty(); }

  // Exponent of `v`, 0 when absent.
  std::uint32_t exponent(Variable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Factors factors_;
};

// Graded lexicographic order: total degree first, then the monomials are
// compared as words of variables written out in increasing order
// (x1_1*x2_1 < x1_1*x2_2 < x1_2*x2_1).
std::strong_ordering graded_lex_compare(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_compare(a, b) < 0;
  }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over the integers in canonical form: terms sorted by
// graded lex order, distinct monomials, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Integer(c)) {}  // NOLINT: integer literals are polynomials
  explicit Polynomial(Integer c);
  explicit Polynomial(Variable v);
  Polynomial(Monomial m, Integer c);

  // Canonicalizes an arbitrary bag of terms (sort, merge, drop zeros).
  static Polynomial from_terms(std::vector<Term> terms);

  // x_v^{(c)} summed over every color in `colors`.
  static Polynomial variable_sum(Vertex vertex, const std::vector<Color>& colors);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // True when the stored terms already satisfy the canonical-form invariants.
  bool is_canonical() const;

 private:
  std::vector<Term> terms_;
};

// Collects many signed summands and canonicalizes lazily. Used by the
// permutation sums, where thousands of products are added one at a time.
class PolynomialAccumulator {
 public:
  void add(const Polynomial& p, int sign = 1);
  void add_term(const Monomial& m, const Integer& c);
  Polynomial finish();

 private:
  void compact();

  std::vector<Term> pending_;
  Polynomial total_;
};

// Text form: "1 + 2*x1_1 - x2_3^2". Terms in graded lex order.
std::string format(const Polynomial& p);
std::string format(const Monomial& m);
std::string format(Variable v);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Inverse of format; tolerates arbitrary whitespace and unmerged terms.
Polynomial parse_polynomial(std::string_view text);

// [{"coeff": "<integer>", "monomial": [[v, c, e], ...]}, ...]
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace pathdet
