#include "pathdet/linear_subdigraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "packed_ring.hpp"

namespace pathdet {

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("a cycle needs at least one vertex");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) throw std::invalid_argument("cycle vertices are 1-based");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()),
              vertices_.end());
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

// ---------------------------------------------------------------------------

LinearSubdigraph::LinearSubdigraph(std::vector<Vertex> successors)
    : successors_(std::move(successors)) {
  const std::size_t n = successors_.size();
  std::vector<bool> seen(n, false);
  for (Vertex start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = start; !seen[v - 1]; v = successors_[v - 1]) {
      seen[v - 1] = true;
      cycle.push_back(v);
    }
    // Starting from the smallest unseen vertex already gives the standard
    // representation, and cycles come out ordered by initial vertex.
    cycles_.emplace_back(std::move(cycle));
  }
}

LinearSubdigraph LinearSubdigraph::from_successors(std::vector<Vertex> successors) {
  std::vector<Vertex> check = successors;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i + 1) throw std::invalid_argument("successor map is not a permutation");
  }
  return LinearSubdigraph(std::move(successors));
}

LinearSubdigraph LinearSubdigraph::from_cycles(const std::vector<Cycle>& cycles) {
  std::size_t n = 0;
  for (const Cycle& c : cycles) n += c.length();
  std::vector<Vertex> successors(n, 0);
  for (const Cycle& c : cycles) {
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vertex v = vs[i];
      if (v > n || successors[v - 1] != 0) {
        throw std::invalid_argument("cycles must partition {1.." + std::to_string(n) + "}");
      }
      successors[v - 1] = vs[(i + 1) % vs.size()];
    }
  }
  return LinearSubdigraph(std::move(successors));
}

Vertex LinearSubdigraph::predecessor(Vertex v) const {
  auto it = std::find(successors_.begin(), successors_.end(), v);
  if (it == successors_.end()) throw std::out_of_range("vertex out of range");
  return static_cast<Vertex>(it - successors_.begin()) + 1;
}

std::size_t LinearSubdigraph::cycle_index_of(Vertex v) const {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i].contains(v)) return i;
  }
  throw std::out_of_range("vertex out of range");
}

std::string format(const Cycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(c.vertices()[i]);
  }
  return out + ")";
}

std::string format(const LinearSubdigraph& g) {
  std::string out;
  for (const Cycle& c : g.cycles()) out += format(c);
  return out.empty() ? "()" : out;
}

LinearSubdigraph parse_linear_subdigraph(std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, pos); };
  skip_ws();
  if (text.substr(pos) == "()") return LinearSubdigraph::from_successors({});
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Vertex> vs;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a vertex number");
      vs.push_back(static_cast<Vertex>(std::stoul(std::string(text.substr(start, pos - start)))));
    }
    if (vs.empty()) fail("empty cycle");
    try {
      cycles.emplace_back(std::move(vs));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    skip_ws();
  }
  try {
    return LinearSubdigraph::from_cycles(cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), pos);
  }
}

// ---------------------------------------------------------------------------

void for_each_linear_subdigraph(std::uint32_t n,
                                const std::function<void(const LinearSubdigraph&)>& visit,
                                std::size_t max_n) {
  if (n > max_n) {
    throw ResourceBoundError("lsd-n", max_n, n,
                             "linear subdigraph enumeration is limited to n <= " +
                                 std::to_string(max_n) + " (got n = " + std::to_string(n) + ")");
  }
  std::vector<Vertex> successors(n);
  std::iota(successors.begin(), successors.end(), Vertex{1});
  do {
    visit(LinearSubdigraph::from_successors(successors));
  } while (std::next_permutation(successors.begin(), successors.end()));
}

std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(std::uint32_t n, std::size_t max_n) {
  std::vector<LinearSubdigraph> out;
  for_each_linear_subdigraph(n, [&](const LinearSubdigraph& g) { out.push_back(g); }, max_n);
  return out;
}

SignedWeight signed_weight(const LinearSubdigraph& g, const PolyMatrix& m) {
  if (g.n() != m.n()) throw std::invalid_argument("subdigraph and matrix sizes differ");
  Polynomial w(1);
  for (Vertex u = 1; u <= g.n() && !w.is_zero(); ++u) w *= m(u, g.successor(u));
  return {g.sign(), std::move(w)};
}

namespace {

// Signed weights summed in generic polynomial arithmetic.
class GenericWeights {
 public:
  explicit GenericWeights(const PolyMatrix& m) : m_(m) {}

  void add(const LinearSubdigraph& g, bool complex) {
    SignedWeight w = signed_weight(g, m_);
    (complex ? complex_ : other_).add(w.weight, w.sign);
  }
  bool same_weight(const LinearSubdigraph& a, const LinearSubdigraph& b) {
    return signed_weight(a, m_).weight == signed_weight(b, m_).weight;
  }
  Polynomial weight(const LinearSubdigraph& g) { return signed_weight(g, m_).weight; }
  Polynomial complex_sum() { return complex_.finish(); }
  Polynomial other_sum() { return other_.finish(); }

 private:
  const PolyMatrix& m_;
  PolynomialAccumulator complex_;
  PolynomialAccumulator other_;
};

// Signed weights in packed arithmetic. Subdigraphs arrive in lexicographic
// order of their successor maps, so the products over the leading vertices
// are cached and only the changed tail is recomputed.
template <class Ring>
class PackedWeights {
 public:
  using Poly = typename Ring::Poly;

  PackedWeights(Ring& ring, const PolyMatrix& m)
      : ring_(ring), n_(m.n()), entries_(ring.encode_matrix(m)), prefix_(m.n()) {
    if (n_ > 0) prefix_[0] = ring_.one();
  }

  void add(const LinearSubdigraph& g, bool complex) {
    (complex ? complex_ : other_).add_product(head(g), last(g), g.sign());
  }
  bool same_weight(const LinearSubdigraph& a, const LinearSubdigraph& b) {
    return Ring::sorted(uncached(a)) == Ring::sorted(uncached(b));
  }
  Polynomial weight(const LinearSubdigraph& g) { return ring_.decode(uncached(g)); }
  Polynomial complex_sum() { return ring_.decode(complex_.take()); }
  Polynomial other_sum() { return ring_.decode(other_.take()); }

 private:
  const Poly& entry(Vertex u, Vertex v) const {
    return entries_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  }
  const Poly& last(const LinearSubdigraph& g) const { return entry(n_, g.successor(n_)); }

  // Product of a_{u, succ(u)} over u < n.
  const Poly& head(const LinearSubdigraph& g) {
    std::uint32_t same = 0;
    while (same < valid_ && prev_[same] == g.successors()[same]) ++same;
    for (std::uint32_t r = same; r + 1 < n_; ++r) {
      prefix_[r + 1] = ring_.multiply(prefix_[r], entry(r + 1, g.successor(r + 1)));
    }
    prev_ = g.successors();
    valid_ = n_ == 0 ? 0 : n_ - 1;
    return prefix_[n_ - 1];
  }

  Poly uncached(const LinearSubdigraph& g) {
    Poly w = ring_.one();
    for (Vertex u = 1; u <= n_ && !w.empty(); ++u) w = ring_.multiply(w, entry(u, g.successor(u)));
    return w;
  }

  Ring& ring_;
  std::uint32_t n_;
  std::vector<Poly> entries_;
  std::vector<Poly> prefix_;  // prefix_[r]: product over the first r vertices
  std::vector<Vertex> prev_;
  std::uint32_t valid_ = 0;   // prefix_[1..valid_] match prev_
  typename Ring::Accumulator complex_;
  typename Ring::Accumulator other_;
};

}  // namespace

Polynomial det_via_linear_subdigraphs(const PolyMatrix& m, std::size_t max_n) {
  auto sum_all = [&](auto& weights) {
    for_each_linear_subdigraph(
        m.n(), [&](const LinearSubdigraph& g) { weights.add(g, false); }, max_n);
    return weights.other_sum();
  };
  if (m.n() == 0) return Polynomial(1);
  auto packed = detail::with_packed_ring(m, [&](auto& ring) {
    PackedWeights<std::remove_reference_t<decltype(ring)>> weights(ring, m);
    return sum_all(weights);
  });
  if (packed) return std::move(*packed);
  GenericWeights weights(m);
  return sum_all(weights);
}

// ---------------------------------------------------------------------------

SingularityReport classify(const LinearSubdigraph& g) {
  const auto& cycles = g.cycles();
  std::vector<bool> on_nontrivial(g.n() + 1, false);
  for (const Cycle& c : cycles) {
    if (c.is_loop()) continue;
    for (Vertex v : c.vertices()) on_nontrivial[v] = true;
  }

  SingularityReport report;
  report.cycles.resize(cycles.size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const Cycle& cycle = cycles[ci];
    const auto& vs = cycle.vertices();
    const std::size_t len = vs.size();
    auto& points = report.cycles[ci].points;

    for (std::size_t pos = 1; pos + 1 < len; ++pos) {
      if (vs[pos - 1] < vs[pos] || vs[pos + 1] < vs[pos]) continue;
      std::size_t peak = pos - 1;
      while (peak >= 1 && vs[peak - 1] > vs[peak]) --peak;
      std::size_t start = peak;
      while (start >= 1 && vs[start - 1] < vs[start]) --start;
      std::size_t end = pos;
      while (end + 1 < len && vs[end + 1] > vs[end]) ++end;
      points.push_back({vs[pos], IdiWitness{vs[start], vs[peak], vs[pos], vs[end]}});
    }

    std::vector<EnclosureWitness> descending;
    for (std::size_t pos = 0; pos < len; ++pos) {
      Vertex a = vs[pos];
      Vertex b = vs[(pos + 1) % len];
      if (a > b) descending.push_back({a, b});
    }
    std::sort(descending.begin(), descending.end(), [](const auto& x, const auto& y) {
      return std::tie(x.from, x.to) < std::tie(y.from, y.to);
    });
    std::vector<bool> recorded(g.n() + 1, false);
    for (const EnclosureWitness& edge : descending) {
      for (Vertex w = edge.to + 1; w < edge.from; ++w) {
        if (recorded[w] || !on_nontrivial[w] || cycle.contains(w)) continue;
        recorded[w] = true;
        points.push_back({w, edge});
      }
    }

    std::sort(points.begin(), points.end(),
              [](const SingularPoint& x, const SingularPoint& y) { return x.vertex < y.vertex; });
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i - 1].vertex == points[i].vertex) {
        throw InvariantViolation("vertex " + std::to_string(points[i].vertex) +
                                 " is both enclosed by and a corner of cycle " + format(cycle) +
                                 " in " + format(g));
      }
    }
    report.cycles[ci].singular = !points.empty();
    if (report.cycles[ci].singular && !report.complex) {
      report.complex = true;
      report.acting_cycle = ci;
      report.acting_point = points.front();
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

const char* to_string(InvolutionCase c) {
  return c == InvolutionCase::kMergeEnclosed ? "merge-enclosed" : "split-corner";
}

InvolutionStep involution_step(const LinearSubdigraph& g) {
  SingularityReport report = classify(g);
  if (!report.complex) {
    throw PreconditionError("the involution acts only on complex subdigraphs; " + format(g) +
                            " is not complex");
  }
  const Cycle& acting = g.cycles()[*report.acting_cycle];
  const SingularPoint& point = *report.acting_point;
  const Vertex v = point.vertex;
  std::vector<Vertex> successors = g.successors();

  if (const auto* enclosure = std::get_if<EnclosureWitness>(&point.witness)) {
    const Cycle& inner = g.cycles()[g.cycle_index_of(v)];
    if (inner.initial() != v) {
      throw InvariantViolation("enclosed acting point " + std::to_string(v) +
                               " is not the initial vertex of its cycle " + format(inner) +
                               " in " + format(g));
    }
    Vertex inner_last = inner.vertices().back();
    // outer_from -> outer_to and inner_last -> v become outer_from -> v and
    // inner_last -> outer_to: the walk along the outer cycle detours
    // through the whole inner cycle.
    std::swap(successors[enclosure->from - 1], successors[inner_last - 1]);
    return {InvolutionCase::kMergeEnclosed, acting.initial(), v,
            MergeDetail{enclosure->from, enclosure->to, inner_last},
            LinearSubdigraph::from_successors(std::move(successors))};
  }

  const auto& idi = std::get<IdiWitness>(point.witness);
  const Vertex corner_pred = g.predecessor(v);
  Vertex return_from = v;
  Vertex return_to = g.successor(v);
  for (std::size_t steps = 0; return_to > v && steps < g.n(); ++steps) {
    return_from = return_to;
    return_to = g.successor(return_to);
  }
  if (!(return_to < v && v < return_from)) {
    throw InvariantViolation("no descending edge across corner " + std::to_string(v) +
                             " after it on cycle " + format(acting) + " in " + format(g));
  }
  // corner_pred -> v and return_from -> return_to become
  // corner_pred -> return_to and return_from -> v: the stretch from the
  // corner up to return_from closes into its own cycle.
  std::swap(successors[corner_pred - 1], successors[return_from - 1]);
  return {InvolutionCase::kSplitCorner, acting.initial(), v,
          SplitDetail{idi.peak, corner_pred, idi.end, return_from, return_to},
          LinearSubdigraph::from_successors(std::move(successors))};
}

LinearSubdigraph involution(const LinearSubdigraph& g) { return involution_step(g).result; }

// ---------------------------------------------------------------------------

namespace {

std::string pair_dump(const LinearSubdigraph& a, const Polynomial& wa, const LinearSubdigraph& b,
                      const Polynomial& wb) {
  std::ostringstream out;
  out << "  gamma   = " << format(a) << "  sign " << a.sign() << "  weight " << format(wa)
      << "\n  f(gamma) = " << format(b) << "  sign " << b.sign() << "  weight " << format(wb);
  return out.str();
}

template <class Weights>
CancellationReport audit(const PolyMatrix& m, std::size_t max_n, Weights& weights) {
  constexpr std::size_t kMaxFailures = 20;
  CancellationReport report;
  auto fail = [&](std::string msg) {
    if (report.failures.size() < kMaxFailures) report.failures.push_back(std::move(msg));
  };
  auto dump = [&](const LinearSubdigraph& a, const LinearSubdigraph& b) {
    return pair_dump(a, weights.weight(a), b, weights.weight(b));
  };

  for_each_linear_subdigraph(
      m.n(),
      [&](const LinearSubdigraph& g) {
        ++report.total;
        bool complex = classify(g).complex;
        weights.add(g, complex);
        if (!complex) return;
        ++report.complex_count;

        std::optional<InvolutionStep> step;
        std::optional<InvolutionStep> back;
        try {
          step = involution_step(g);
          back = involution_step(step->result);
        } catch (const std::exception& e) {
          fail(std::string("involution failed on ") + format(g) + ": " + e.what());
          return;
        }
        const LinearSubdigraph& image = step->result;
        if (back->result != g) {
          fail("f(f(gamma)) != gamma:\n" + dump(g, image) +
               "\n  f(f(gamma)) = " + format(back->result));
        }
        std::size_t c0 = g.cycle_count();
        std::size_t c1 = image.cycle_count();
        if ((c0 > c1 ? c0 - c1 : c1 - c0) != 1 || g.sign() == image.sign()) {
          fail("cycle count does not change by one:\n" + dump(g, image));
        }
        if (back->which == step->which || back->acting_point != step->acting_point ||
            back->acting_cycle_initial != step->acting_cycle_initial) {
          fail("partner acts at a different place:\n" + dump(g, image));
        }
        // Each pair is weighed once, from its lexicographically smaller member.
        if (g < image) {
          ++report.orbit_count;
          if (step->which == InvolutionCase::kMergeEnclosed) {
            ++report.merge_count;
          } else {
            ++report.split_count;
          }
          if (!weights.same_weight(g, image)) fail("weights differ:\n" + dump(g, image));
        }
      },
      max_n);

  report.complex_sum = weights.complex_sum();
  report.noncomplex_sum = weights.other_sum();
  report.determinant = det_leibniz(m, std::max<std::size_t>(max_n, m.n()));
  if (!report.complex_sum.is_zero()) {
    fail("complex signed weights sum to " + format(report.complex_sum) + ", not 0");
  }
  if (report.noncomplex_sum != report.determinant) {
    fail("non-complex signed weights sum to " + format(report.noncomplex_sum) +
         " but the determinant is " + format(report.determinant));
  }
  if (report.complex_count != 2 * report.orbit_count) {
    fail("complex subdigraphs do not split into pairs: " + std::to_string(report.complex_count) +
         " complex, " + std::to_string(report.orbit_count) + " orbits");
  }
  return report;
}

}  // namespace

CancellationReport verify_cancellation(const PolyMatrix& m, std::size_t max_n) {
  if (m.n() > 0) {
    auto packed = detail::with_packed_ring(m, [&](auto& ring) {
      PackedWeights<std::remove_reference_t<decltype(ring)>> weights(ring, m);
      return audit(m, max_n, weights);
    });
    if (packed) return std::move(*packed);
  }
  GenericWeights weights(m);
  return audit(m, max_n, weights);
}

}  // namespace pathdet
