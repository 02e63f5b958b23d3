#include "pathdet/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace pathdet {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exponent == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exponent += f.exponent;
    } else {
      m.factors_.push_back(f);
    }
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const Factor& f : factors_) d += f.exponent;
  return d;
}

std::uint32_t Monomial::exponent(Variable v) const {
  for (const Factor& f : factors_) {
    if (f.var == v) return f.exponent;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->var < ib->var) {
      out.factors_.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

std::strong_ordering graded_lex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Equal degree: walk both expanded words letter by letter.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t ia = 0, ib = 0;
  std::uint32_t left_a = fa.empty() ? 0 : fa[0].exponent;
  std::uint32_t left_b = fb.empty() ? 0 : fb[0].exponent;
  while (ia < fa.size() && ib < fb.size()) {
    if (auto c = fa[ia].var <=> fb[ib].var; c != 0) return c;
    std::uint32_t step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia < fa.size()) left_a = fa[ia].exponent;
    if (left_b == 0 && ++ib < fb.size()) left_b = fb[ib].exponent;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Integer c) {
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial{v}, Integer(1)}); }

Polynomial::Polynomial(Monomial m, Integer c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return graded_lex_compare(a.monomial, b.monomial) < 0;
  });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::variable_sum(Vertex vertex, const std::vector<Color>& colors) {
  std::vector<Term> terms;
  terms.reserve(colors.size());
  for (Color c : colors) terms.push_back({Monomial{Variable{vertex, c}}, Integer(1)});
  return from_terms(std::move(terms));
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return 0;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return graded_lex_compare(t.monomial, key) < 0;
                             });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

namespace {

// Merge of two canonical term lists, `sign` applied to the right operand.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    std::strong_ordering c = std::strong_ordering::less;
    if (ia == a.end()) {
      c = std::strong_ordering::greater;
    } else if (ib != b.end()) {
      c = graded_lex_compare(ia->monomial, ib->monomial);
    }
    if (c < 0) {
      out.push_back(*ia++);
    } else if (c > 0) {
      out.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
      ++ib;
    } else {
      Integer sum = sign > 0 ? ia->coeff + ib->coeff : ia->coeff - ib->coeff;
      if (sum != 0) out.push_back({ia->monomial, std::move(sum)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].monomial.is_one() && b.terms_[0].coeff == 1) {
    return a;
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      products.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
    }
  }
  return Polynomial::from_terms(std::move(products));
}

Polynomial operator-(Polynomial p) {
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) return false;
    const auto& fs = terms_[i].monomial.factors();
    for (std::size_t f = 0; f < fs.size(); ++f) {
      if (fs[f].exponent == 0) return false;
      if (f > 0 && !(fs[f - 1].var < fs[f].var)) return false;
    }
    if (i > 0 && graded_lex_compare(terms_[i - 1].monomial, terms_[i].monomial) >= 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

void PolynomialAccumulator::add(const Polynomial& p, int sign) {
  for (const Term& t : p.terms()) {
    pending_.push_back({t.monomial, sign > 0 ? t.coeff : Integer(-t.coeff)});
  }
  if (pending_.size() > (1u << 16)) compact();
}

void PolynomialAccumulator::add_term(const Monomial& m, const Integer& c) {
  pending_.push_back({m, c});
  if (pending_.size() > (1u << 16)) compact();
}

void PolynomialAccumulator::compact() {
  total_ += Polynomial::from_terms(std::move(pending_));
  pending_.clear();
}

Polynomial PolynomialAccumulator::finish() {
  compact();
  return std::exchange(total_, Polynomial{});
}

// ---------------------------------------------------------------------------

std::string format(Variable v) {
  return "x" + std::to_string(v.vertex()) + "_" + std::to_string(v.color());
}

std::string format(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += format(f.var);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Integer mag = t.coeff < 0 ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (t.coeff < 0) out += '-';
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += format(t.monomial);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = take() == '-' ? -1 : 1;
      skip_ws();
    }
    for (;;) {
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      sign = take() == '-' ? -1 : 1;
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term term() {
    Integer coeff = 1;
    std::vector<Factor> factors;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        take();
        skip_ws();
      } else {
        return {Monomial{}, coeff};
      }
    }
    factors.push_back(factor());
    for (;;) {
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        take();
        skip_ws();
        factors.push_back(factor());
      } else {
        pos_ = save;
        break;
      }
    }
    return {Monomial::from_factors(std::move(factors)), coeff};
  }

  Factor factor() {
    if (pos_ >= s_.size() || peek() != 'x') fail("expected variable");
    take();
    std::size_t at = pos_;
    auto vertex = small_index();
    if (vertex == 0) fail_at("vertex index must be positive", at);
    if (pos_ >= s_.size() || peek() != '_') fail("expected '_'");
    take();
    at = pos_;
    auto color = small_index();
    if (color == 0) fail_at("color index must be positive", at);
    std::uint32_t exponent = 1;
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && peek() == '^') {
      take();
      skip_ws();
      at = pos_;
      exponent = small_index();
      if (exponent == 0) fail_at("exponent must be positive", at);
    } else {
      pos_ = save;
    }
    return {Variable{vertex, color}, exponent};
  }

  std::uint32_t small_index() {
    std::size_t start = pos_;
    Integer v = integer();
    if (v > std::numeric_limits<std::uint32_t>::max()) fail_at("index out of range", start);
    return static_cast<std::uint32_t>(v);
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    auto mono = nlohmann::json::array();
    for (const Factor& f : t.monomial.factors()) {
      mono.push_back({f.var.vertex(), f.var.color(), f.exponent});
    }
    out.push_back({{"coeff", t.coeff.str()}, {"monomial", std::move(mono)}});
  }
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    std::vector<Factor> factors;
    for (const auto& f : t.at("monomial")) {
      auto v = f.at(0).get<std::uint32_t>();
      auto c = f.at(1).get<std::uint32_t>();
      factors.push_back({Variable{v, c}, f.at(2).get<std::uint32_t>()});
    }
    terms.push_back({Monomial::from_factors(std::move(factors)),
                     Integer(t.at("coeff").get<std::string>())});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace pathdet
