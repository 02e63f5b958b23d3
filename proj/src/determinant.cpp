#include "pathdet/determinant.hpp"

#include <vector>

#include "packed_ring.hpp"

namespace pathdet {

namespace {

struct LeibnizWalk {
  const PolyMatrix& m;
  std::uint32_t n;
  std::vector<bool> used;
  std::vector<Polynomial> prefix;  // prefix[r] = product of the first r chosen entries
  PolynomialAccumulator acc;

  void descend(std::uint32_t row, int inversions) {
    if (row == n) {
      acc.add(prefix[n], inversions % 2 == 0 ? 1 : -1);
      return;
    }
    int greater_used = 0;
    for (std::uint32_t c = n; c-- > 0;) {
      if (used[c]) {
        ++greater_used;
        continue;
      }
      const Polynomial& entry = m(row + 1, c + 1);
      if (entry.is_zero()) continue;
      prefix[row + 1] = prefix[row] * entry;
      used[c] = true;
      descend(row + 1, inversions + greater_used);
      used[c] = false;
    }
  }
};

// Same walk over packed polynomials; the last factor of each permutation is
// multiplied straight into the accumulator.
template <class Ring>
struct PackedLeibnizWalk {
  using Poly = typename Ring::Poly;
  Ring& ring;
  const std::vector<Poly>& entries;
  std::uint32_t n;
  std::vector<bool> used;
  std::vector<Poly> prefix;
  typename Ring::Accumulator acc;

  void descend(std::uint32_t row, int inversions) {
    int greater_used = 0;
    for (std::uint32_t c = n; c-- > 0;) {
      if (used[c]) {
        ++greater_used;
        continue;
      }
      const Poly& entry = entries[static_cast<std::size_t>(row) * n + c];
      if (entry.empty()) continue;
      int parity = inversions + greater_used;
      if (row + 1 == n) {
        acc.add_product(prefix[row], entry, parity % 2 == 0 ? 1 : -1);
        continue;
      }
      prefix[row + 1] = ring.multiply(prefix[row], entry);
      used[c] = true;
      descend(row + 1, parity);
      used[c] = false;
    }
  }
};

Polynomial leibniz_generic(const PolyMatrix& m) {
  LeibnizWalk walk{m, m.n(), std::vector<bool>(m.n(), false),
                   std::vector<Polynomial>(m.n() + 1), {}};
  walk.prefix[0] = Polynomial(1);
  walk.descend(0, 0);
  return walk.acc.finish();
}

}  // namespace

Polynomial det_leibniz(const PolyMatrix& m, std::size_t max_n) {
  if (m.n() > max_n) {
    throw ResourceBoundError("oracle-n", max_n, m.n(),
                             "permutation expansion is limited to n <= " +
                                 std::to_string(max_n) + " (got n = " + std::to_string(m.n()) +
                                 "); use the division-free algorithm");
  }
  if (m.n() == 0) return Polynomial(1);
  auto packed = detail::with_packed_ring(m, [&](auto& ring) {
    using Ring = std::remove_reference_t<decltype(ring)>;
    auto entries = ring.encode_matrix(m);
    PackedLeibnizWalk<Ring> walk{ring, entries, m.n(), std::vector<bool>(m.n(), false),
                                 std::vector<typename Ring::Poly>(m.n()), {}};
    walk.prefix[0] = ring.one();
    walk.descend(0, 0);
    return ring.decode(walk.acc.take());
  });
  return packed ? std::move(*packed) : leibniz_generic(m);
}

namespace {

void check_layer(std::size_t layer, std::uint32_t len, std::size_t term_ceiling,
                 const DivisionFreeStats& local, DivisionFreeStats* stats) {
  if (layer <= term_ceiling) return;
  if (stats) *stats = local;
  throw ResourceBoundError("term-ceiling", term_ceiling, layer,
                           "division-free determinant exceeded the term ceiling of " +
                               std::to_string(term_ceiling) + " (layer " +
                               std::to_string(len + 1) + " holds " + std::to_string(layer) +
                               " terms)");
}

// State (head h, current vertex u) after l edges holds the signed weight of
// all partial clow sequences whose open clow started at h and sits at u.
// Closing a clow flips the sign and opens the next clow at a larger head.
Polynomial division_free_generic(const PolyMatrix& m, std::size_t term_ceiling,
                                 DivisionFreeStats* stats) {
  const std::uint32_t n = m.n();
  auto at = [n](std::uint32_t h, std::uint32_t u) { return static_cast<std::size_t>(h) * n + u; };
  std::vector<Polynomial> cur(static_cast<std::size_t>(n) * n);
  std::vector<Polynomial> next(cur.size());
  for (std::uint32_t h = 0; h < n; ++h) cur[at(h, h)] = Polynomial(1);

  DivisionFreeStats local;
  Polynomial complete;
  for (std::uint32_t len = 0; len < n; ++len) {
    const bool last = len + 1 == n;
    for (auto& p : next) p = Polynomial{};
    Polynomial closed_below;  // closed clows with head < h2, for the next head h2
    for (std::uint32_t h = 0; h < n; ++h) {
      if (!last && h > 0) next[at(h, h)] = closed_below;
      PolynomialAccumulator closed;
      for (std::uint32_t u = h; u < n; ++u) {
        const Polynomial& val = cur[at(h, u)];
        if (val.is_zero()) continue;
        if (!last) {
          for (std::uint32_t v = h + 1; v < n; ++v) {
            const Polynomial& a = m(u + 1, v + 1);
            if (!a.is_zero()) next[at(h, v)] += val * a;
          }
        }
        const Polynomial& back = m(u + 1, h + 1);
        if (!back.is_zero()) closed.add(val * back, -1);
      }
      Polynomial c = closed.finish();
      if (last) {
        complete += c;
      } else {
        closed_below += c;
      }
    }
    std::size_t layer = 0;
    for (const auto& p : next) {
      layer += p.size();
      local.peak_state_terms = std::max(local.peak_state_terms, p.size());
    }
    local.peak_layer_terms = std::max(local.peak_layer_terms, layer);
    check_layer(layer, len, term_ceiling, local, stats);
    std::swap(cur, next);
  }
  if (stats) *stats = local;
  return n % 2 == 0 ? complete : -complete;
}

template <class Ring>
Polynomial division_free_packed(Ring& ring, const PolyMatrix& m, std::size_t term_ceiling,
                                DivisionFreeStats* stats) {
  using Poly = typename Ring::Poly;
  const std::uint32_t n = m.n();
  const std::vector<Poly> entries = ring.encode_matrix(m);
  auto a = [&](std::uint32_t u, std::uint32_t v) -> const Poly& {
    return entries[static_cast<std::size_t>(u) * n + v];
  };
  auto at = [n](std::uint32_t h, std::uint32_t u) { return static_cast<std::size_t>(h) * n + u; };
  std::vector<Poly> cur(static_cast<std::size_t>(n) * n);
  std::vector<Poly> next(cur.size());
  for (std::uint32_t h = 0; h < n; ++h) cur[at(h, h)] = ring.one();

  typename Ring::Accumulator acc;
  typename Ring::Accumulator complete;
  DivisionFreeStats local;
  for (std::uint32_t len = 0; len < n; ++len) {
    const bool last = len + 1 == n;
    for (auto& p : next) p.clear();
    Poly closed_below;
    for (std::uint32_t h = 0; h < n; ++h) {
      if (!last) {
        if (h > 0) next[at(h, h)] = closed_below;
        for (std::uint32_t v = h + 1; v < n; ++v) {
          for (std::uint32_t u = h; u < n; ++u) acc.add_product(cur[at(h, u)], a(u, v), 1);
          next[at(h, v)] = acc.take();
        }
      }
      for (std::uint32_t u = h; u < n; ++u) {
        (last ? complete : acc).add_product(cur[at(h, u)], a(u, h), -1);
      }
      if (!last) {
        acc.add(closed_below, 1);
        closed_below = acc.take();
      }
    }
    std::size_t layer = 0;
    for (const auto& p : next) {
      layer += p.size();
      local.peak_state_terms = std::max(local.peak_state_terms, p.size());
    }
    local.peak_layer_terms = std::max(local.peak_layer_terms, layer);
    check_layer(layer, len, term_ceiling, local, stats);
    std::swap(cur, next);
  }
  if (stats) *stats = local;
  Poly result = complete.take();
  return ring.decode(n % 2 == 0 ? result : Ring::negate(std::move(result)));
}

}  // namespace

Polynomial det_division_free(const PolyMatrix& m, std::size_t term_ceiling,
                             DivisionFreeStats* stats) {
  if (m.n() == 0) return Polynomial(1);
  auto packed = detail::with_packed_ring(
      m, [&](auto& ring) { return division_free_packed(ring, m, term_ceiling, stats); });
  return packed ? std::move(*packed) : division_free_generic(m, term_ceiling, stats);
}

}  // namespace pathdet
