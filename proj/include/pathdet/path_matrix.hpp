#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pathdet/digraph.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet {

// Dense square matrix of polynomials. Row and column indices are 1-based,
// matching the vertex labels of the graph the matrix was built from.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::uint32_t n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  std::uint32_t n() const { return n_; }

  const Polynomial& operator()(std::uint32_t row, std::uint32_t col) const {
    return entries_[index(row, col)];
  }
  Polynomial& operator()(std::uint32_t row, std::uint32_t col) {
    return entries_[index(row, col)];
  }

  PolyMatrix transposed() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(std::uint32_t row, std::uint32_t col) const {
    if (row < 1 || col < 1 || row > n_ || col > n_) {
      throw std::out_of_range("matrix index out of range");
    }
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  std::uint32_t n_ = 0;
  std::vector<Polynomial> entries_;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The colored path matrix:
//   a_ii = 1 + sum_t x_i^(t)
//   a_ij = sum of x_i^(t) over colors t missing from edge (i, j), for i < j
//   a_ij = sum_t x_i^(t), for i > j
PolyMatrix build_colored_matrix(const ColoredDigraph& g);

// Single-color special case with x_i standing for x_i^(1): a_ij is 0 for an
// edge, x_i otherwise off the diagonal, 1 + x_i on it. Requires k == 1.
PolyMatrix build_stanley_matrix(const ColoredDigraph& g);

nlohmann::json to_json(const PolyMatrix& m);

// Column-aligned grid, one row per line.
std::string format_grid(const PolyMatrix& m);

}  // namespace pathdet
