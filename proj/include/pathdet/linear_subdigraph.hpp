#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pathdet/determinant.hpp"
#include "pathdet/path_matrix.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet {

// A directed cycle in standard representation: the first vertex is the
// smallest, and the cycle closes from the last vertex back to the first.
// A single vertex is a loop.
class Cycle {
 public:
  // Rotates `vertices` so the minimum comes first. Throws on empty input,
  // repeated vertices, or vertex 0.
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex initial() const { return vertices_.front(); }
  std::size_t length() const { return vertices_.size(); }
  bool is_loop() const { return vertices_.size() == 1; }
  bool contains(Vertex v) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// A spanning set of vertex-disjoint cycles on {1..n}; equivalently a
// permutation, stored here by its successor map.
class LinearSubdigraph {
 public:
  // successors[v - 1] is the vertex that follows v. Must be a permutation.
  static LinearSubdigraph from_successors(std::vector<Vertex> successors);
  // The cycles must partition {1..n}, where n is their total vertex count.
  static LinearSubdigraph from_cycles(const std::vector<Cycle>& cycles);

  std::uint32_t n() const { return static_cast<std::uint32_t>(successors_.size()); }
  Vertex successor(Vertex v) const { return successors_.at(v - 1); }
  Vertex predecessor(Vertex v) const;
  const std::vector<Vertex>& successors() const { return successors_; }

  // Sorted by initial vertex.
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::size_t cycle_count() const { return cycles_.size(); }
  std::size_t cycle_index_of(Vertex v) const;

  // (-1)^(n + c)
  int sign() const { return (n() + cycle_count()) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const LinearSubdigraph& a, const LinearSubdigraph& b) {
    return a.successors_ == b.successors_;
  }
  friend auto operator<=>(const LinearSubdigraph& a, const LinearSubdigraph& b) {
    return a.successors_ <=> b.successors_;
  }

 private:
  explicit LinearSubdigraph(std::vector<Vertex> successors);

  std::vector<Vertex> successors_;
  std::vector<Cycle> cycles_;
};

// "(1 7 6 9 10 3 2)(4 5)(8 11)", loops written "(3)".
std::string format(const Cycle& c);
std::string format(const LinearSubdigraph& g);
LinearSubdigraph parse_linear_subdigraph(std::string_view text);

// Visits all n! linear subdigraphs, in lexicographic order of their
// successor maps. Refuses n > max_n.
void for_each_linear_subdigraph(std::uint32_t n,
                                const std::function<void(const LinearSubdigraph&)>& visit,
                                std::size_t max_n = kDefaultLsdBound);
std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(std::uint32_t n,
                                                           std::size_t max_n = kDefaultLsdBound);

struct SignedWeight {
  int sign;
  Polynomial weight;  // product of a_{u, succ(u)} over all u
};

SignedWeight signed_weight(const LinearSubdigraph& g, const PolyMatrix& m);

// Sum of signed weights over every linear subdigraph.
Polynomial det_via_linear_subdigraphs(const PolyMatrix& m, std::size_t max_n = kDefaultLsdBound);

// ---------------------------------------------------------------------------
// Singularity

// Descending edge from -> to of the enclosing cycle, to < point < from.
struct EnclosureWitness {
  Vertex from;
  Vertex to;
  friend bool operator==(const EnclosureWitness&, const EnclosureWitness&) = default;
};

// start I peak D corner I end, read along the cycle's standard representation.
struct IdiWitness {
  Vertex start;
  Vertex peak;
  Vertex corner;
  Vertex end;
  friend bool operator==(const IdiWitness&, const IdiWitness&) = default;
};

enum class SingularityKind { kEnclosed, kIdiCorner };

struct SingularPoint {
  Vertex vertex;
  std::variant<EnclosureWitness, IdiWitness> witness;

  SingularityKind kind() const {
    return std::holds_alternative<EnclosureWitness>(witness) ? SingularityKind::kEnclosed
                                                             : SingularityKind::kIdiCorner;
  }
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

struct CycleReport {
  bool singular = false;
  std::vector<SingularPoint> points;  // sorted by vertex
};

struct SingularityReport {
  std::vector<CycleReport> cycles;  // parallel to LinearSubdigraph::cycles()
  bool complex = false;
  // The singular cycle with the smallest initial vertex, and its smallest
  // point of singularity. Set iff complex.
  std::optional<std::size_t> acting_cycle;
  std::optional<SingularPoint> acting_point;
};

// Enclosed points: vertices of other nontrivial cycles lying strictly inside
// a descending edge of the cycle; among several witnesses the one with the
// smallest `from` (then smallest `to`) is reported. IDI corners: every
// interior local minimum of the standard representation (the first step out
// of the minimum is always an ascent, so each such minimum closes an
// increase-decrease and opens a new increase).
SingularityReport classify(const LinearSubdigraph& g);

// ---------------------------------------------------------------------------
// Sign-reversing involution on complex linear subdigraphs

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class InvolutionCase { kMergeEnclosed, kSplitCorner };

// Case 1: the acting point is enclosed by the acting cycle through
// `outer_from -> outer_to`; its own cycle starts at the acting point and
// closes through `inner_last -> acting point`.
struct MergeDetail {
  Vertex outer_from;
  Vertex outer_to;
  Vertex inner_last;
};

// Case 2: the acting point is an IDI corner entered by the descending run
// `peak D ... corner_pred -> corner`. From the corner the cycle climbs to
// `ascent_end` and first drops below the corner on `return_from -> return_to`.
struct SplitDetail {
  Vertex peak;
  Vertex corner_pred;
  Vertex ascent_end;
  Vertex return_from;
  Vertex return_to;
};

struct InvolutionStep {
  InvolutionCase which;
  Vertex acting_cycle_initial;
  Vertex acting_point;
  std::variant<MergeDetail, SplitDetail> detail;
  LinearSubdigraph result;
};

// Applies the involution and reports how. Case 1 merges the inner cycle into
// the enclosing one (one cycle fewer); Case 2 splits at the corner (one
// more). In both cases exactly two descending edges exchange their heads,
// so every edge weight is preserved. Throws PreconditionError when `g` is not
// complex, InvariantViolation when the structure the construction relies on
// is missing.
InvolutionStep involution_step(const LinearSubdigraph& g);
LinearSubdigraph involution(const LinearSubdigraph& g);

const char* to_string(InvolutionCase c);

struct CancellationReport {
  std::size_t total = 0;
  std::size_t complex_count = 0;
  std::size_t orbit_count = 0;
  std::size_t merge_count = 0;
  std::size_t split_count = 0;
  Polynomial complex_sum;     // signed weights of complex subdigraphs
  Polynomial noncomplex_sum;  // signed weights of the rest
  Polynomial determinant;     // permutation expansion, for comparison
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Exhaustive audit: every complex subdigraph is paired by the involution
// with a complex partner of equal weight and a cycle count differing by one;
// complex signed weights sum to 0 and the rest sum to the determinant.
CancellationReport verify_cancellation(const PolyMatrix& m, std::size_t max_n = kDefaultLsdBound);

}  // namespace pathdet
