#pragma once

// Fast arithmetic for the determinant routines. Each variable occurring in a
// matrix gets a fixed bit field inside a W-word key, wide enough for the
// largest exponent a product of n entries can reach; multiplying monomials
// is then word-wise addition. Coefficients are int64 with overflow checks.
// Callers fall back to the generic Polynomial code when a matrix does not
// pack into kMaxWords words or a coefficient overflows.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "pathdet/path_matrix.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet::detail {

class PackedOverflow : public std::overflow_error {
 public:
  PackedOverflow() : std::overflow_error("coefficient exceeds 64 bits") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw PackedOverflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw PackedOverflow();
  return r;
}

// Bit field assignment for the variables of one matrix.
struct PackingLayout {
  struct Field {
    Variable var;
    std::uint32_t word;
    std::uint32_t shift;
    std::uint64_t mask;  // unshifted
  };
  std::vector<Field> fields;  // sorted by variable
  std::size_t words = 0;

  static constexpr std::size_t kMaxWords = 4;

  // Room for any product of up to `max_factors` entries of `m`.
  static std::optional<PackingLayout> plan(const PolyMatrix& m, std::uint64_t max_factors) {
    std::vector<std::pair<Variable, std::uint64_t>> max_exp;
    for (std::uint32_t i = 1; i <= m.n(); ++i) {
      for (std::uint32_t j = 1; j <= m.n(); ++j) {
        for (const Term& t : m(i, j).terms()) {
          for (const Factor& f : t.monomial.factors()) max_exp.push_back({f.var, f.exponent});
        }
      }
    }
    std::sort(max_exp.begin(), max_exp.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PackingLayout layout;
    std::uint32_t word = 0;
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < max_exp.size();) {
      Variable v = max_exp[i].first;
      std::uint64_t e = 0;
      for (; i < max_exp.size() && max_exp[i].first == v; ++i) e = std::max(e, max_exp[i].second);
      std::uint64_t bound = 0;
      if (__builtin_mul_overflow(e, std::max<std::uint64_t>(max_factors, 1), &bound)) {
        return std::nullopt;
      }
      auto width = static_cast<std::uint32_t>(std::bit_width(bound));
      if (width > 63) return std::nullopt;
      if (used + width > 64) {
        ++word;
        used = 0;
      }
      layout.fields.push_back({v, word, used, (std::uint64_t{1} << width) - 1});
      used += width;
    }
    layout.words = layout.fields.empty() ? 1 : word + 1;
    if (layout.words > kMaxWords) return std::nullopt;
    return layout;
  }
};

template <std::size_t W>
class PackedRing {
 public:
  using Key = std::array<std::uint64_t, W>;
  struct Term {
    Key key;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };
  // Distinct keys, nonzero coefficients, no particular order.
  using Poly = std::vector<Term>;

  explicit PackedRing(PackingLayout layout) : layout_(std::move(layout)) {}

  static Key add_keys(const Key& a, const Key& b) {
    Key r;
    for (std::size_t w = 0; w < W; ++w) r[w] = a[w] + b[w];
    return r;
  }

  Poly one() const { return {{Key{}, 1}}; }

  Poly encode(const Polynomial& p) const {
    Poly out;
    out.reserve(p.size());
    for (const pathdet::Term& t : p.terms()) {
      if (t.coeff > std::numeric_limits<std::int64_t>::max() ||
          t.coeff < std::numeric_limits<std::int64_t>::min()) {
        throw PackedOverflow();
      }
      Key key{};
      for (const Factor& f : t.monomial.factors()) {
        const auto& field = find(f.var);
        key[field.word] |= std::uint64_t{f.exponent} << field.shift;
      }
      out.push_back({key, static_cast<std::int64_t>(t.coeff)});
    }
    return out;
  }

  Polynomial decode(const Poly& p) const {
    std::vector<pathdet::Term> terms;
    terms.reserve(p.size());
    std::vector<Factor> factors;
    for (const Term& t : p) {
      factors.clear();
      for (const auto& field : layout_.fields) {
        auto e = static_cast<std::uint32_t>((t.key[field.word] >> field.shift) & field.mask);
        if (e != 0) factors.push_back({field.var, e});
      }
      terms.push_back({Monomial::from_factors(factors), Integer(t.coeff)});
    }
    return Polynomial::from_terms(std::move(terms));
  }

  // Sum of signed polynomials and products, merged by key.
  class Accumulator {
   public:
    void add(const Poly& p, std::int64_t sign) {
      for (const Term& t : p) bump(t.key, checked_mul(t.coeff, sign));
    }
    void add_product(const Poly& a, const Poly& b, std::int64_t sign) {
      for (const Term& x : a) {
        std::int64_t cx = checked_mul(x.coeff, sign);
        for (const Term& y : b) bump(add_keys(x.key, y.key), checked_mul(cx, y.coeff));
      }
    }
    Poly take() {
      Poly out;
      out.reserve(map_.size());
      for (const auto& [key, coeff] : map_) {
        if (coeff != 0) out.push_back({key, coeff});
      }
      map_.clear();
      return out;
    }

   private:
    void bump(const Key& key, std::int64_t c) {
      auto [it, inserted] = map_.try_emplace(key, c);
      if (!inserted) it->second = checked_add(it->second, c);
    }

    absl::flat_hash_map<Key, std::int64_t> map_;
  };

  Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    if (b.size() == 1) return scale(a, b.front());
    if (a.size() == 1) return scale(b, a.front());
    scratch_.add_product(a, b, 1);
    return scratch_.take();
  }

  static Poly negate(Poly p) {
    for (Term& t : p) t.coeff = checked_mul(t.coeff, -1);
    return p;
  }

  static Poly sorted(Poly p) {
    std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    return p;
  }

  std::vector<Poly> encode_matrix(const PolyMatrix& m) const {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(m.n()) * m.n());
    for (std::uint32_t i = 1; i <= m.n(); ++i) {
      for (std::uint32_t j = 1; j <= m.n(); ++j) out.push_back(encode(m(i, j)));
    }
    return out;
  }

 private:
  // Adding a fixed key is injective, so distinct keys stay distinct.
  static Poly scale(const Poly& a, const Term& s) {
    Poly out;
    out.reserve(a.size());
    for (const Term& t : a) out.push_back({add_keys(t.key, s.key), checked_mul(t.coeff, s.coeff)});
    return out;
  }

  const PackingLayout::Field& find(Variable v) const {
    auto it = std::lower_bound(layout_.fields.begin(), layout_.fields.end(), v,
                               [](const PackingLayout::Field& f, Variable x) { return f.var < x; });
    if (it == layout_.fields.end() || !(it->var == v)) {
      throw std::logic_error("variable missing from packing layout");
    }
    return *it;
  }

  PackingLayout layout_;
  Accumulator scratch_;
};

// Runs `body(ring)` with a ring sized for products of up to m.n() entries of
// `m`. Returns nullopt when the matrix does not pack or a coefficient
// overflows, so the caller can take its generic path.
template <class Body>
auto with_packed_ring(const PolyMatrix& m, Body&& body)
    -> std::optional<decltype(body(std::declval<PackedRing<1>&>()))> {
  auto layout = PackingLayout::plan(m, m.n());
  if (!layout) return std::nullopt;
  try {
    switch (layout->words) {
      case 1: {
        PackedRing<1> ring(std::move(*layout));
        return body(ring);
      }
      case 2: {
        PackedRing<2> ring(std::move(*layout));
        return body(ring);
      }
      default: {
        PackedRing<4> ring(std::move(*layout));
        return body(ring);
      }
    }
  } catch (const PackedOverflow&) {
    return std::nullopt;
  }
}

}  // namespace pathdet::detail
