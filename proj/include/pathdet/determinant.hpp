#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "pathdet/path_matrix.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet {

// Defaults shared by the library entry points and the CLI flags.
inline constexpr std::size_t kDefaultOracleBound = 8;
inline constexpr std::size_t kDefaultLsdBound = 8;
inline constexpr std::size_t kDefaultTermCeiling = 5'000'000;

// A configured resource limit was hit. `bound()` names the limit
// ("oracle-n", "lsd-n", "term-ceiling").
class ResourceBoundError : public std::runtime_error {
 public:
  ResourceBoundError(std::string bound, std::size_t limit, std::size_t actual,
                     const std::string& detail)
      : std::runtime_error(detail), bound_(std::move(bound)), limit_(limit), actual_(actual) {}

  const std::string& bound() const { return bound_; }
  std::size_t limit() const { return limit_; }
  std::size_t actual() const { return actual_; }

 private:
  std::string bound_;
  std::size_t limit_;
  std::size_t actual_;
};

// Sum over all n! permutations of sign * product of entries. Refuses
// matrices larger than `max_n`.
Polynomial det_leibniz(const PolyMatrix& m, std::size_t max_n = kDefaultOracleBound);

struct DivisionFreeStats {
  std::size_t peak_state_terms = 0;  // largest single DP state seen
  std::size_t peak_layer_terms = 0;  // largest total over one DP layer
};

// Clow-sequence dynamic program (Mahajan & Vinay): O(n^4) ring operations,
// no division, valid over any commutative ring. Aborts with
// ResourceBoundError once a DP layer holds more than `term_ceiling` terms.
Polynomial det_division_free(const PolyMatrix& m,
                             std::size_t term_ceiling = kDefaultTermCeiling,
                             DivisionFreeStats* stats = nullptr);

}  // namespace pathdet
