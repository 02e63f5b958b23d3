#include "pathdet/path_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace pathdet {

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(n_);
  for (std::uint32_t i = 1; i <= n_; ++i) {
    for (std::uint32_t j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix build_colored_matrix(const ColoredDigraph& g) {
  const std::uint32_t n = g.n();
  std::vector<Color> all_colors(g.k());
  std::iota(all_colors.begin(), all_colors.end(), Color{1});

  PolyMatrix m(n);
  for (Vertex i = 1; i <= n; ++i) {
    Polynomial row_sum = Polynomial::variable_sum(i, all_colors);
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) {
        m(i, j) = Polynomial(1) + row_sum;
      } else if (i > j) {
        m(i, j) = row_sum;
      } else {
        // Absent edges and empty color sets both leave the full sum.
        auto present = g.colors(i, j);
        std::vector<Color> missing;
        std::set_difference(all_colors.begin(), all_colors.end(), present.begin(),
                            present.end(), std::back_inserter(missing));
        m(i, j) = Polynomial::variable_sum(i, missing);
      }
    }
  }
  return m;
}

PolyMatrix build_stanley_matrix(const ColoredDigraph& g) {
  if (g.k() != 1) {
    throw PreconditionError("the single-color matrix needs k = 1, got k = " +
                            std::to_string(g.k()));
  }
  const std::uint32_t n = g.n();
  PolyMatrix m(n);
  for (Vertex i = 1; i <= n; ++i) {
    Polynomial x{Variable{i, 1}};
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) {
        m(i, j) = Polynomial(1) + x;
      } else if (i < j && !g.colors(i, j).empty()) {
        m(i, j) = Polynomial{};
      } else {
        m(i, j) = x;
      }
    }
  }
  return m;
}

nlohmann::json to_json(const PolyMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::uint32_t i = 1; i <= m.n(); ++i) {
    auto row = nlohmann::json::array();
    for (std::uint32_t j = 1; j <= m.n(); ++j) row.push_back(format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_grid(const PolyMatrix& m) {
  const std::uint32_t n = m.n();
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  std::vector<std::size_t> width(n, 0);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      cells.push_back(format(m(i, j)));
      width[j - 1] = std::max(width[j - 1], cells.back().size());
    }
  }
  std::string out;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string line;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::string& cell = cells[static_cast<std::size_t>(i) * n + j];
      if (j > 0) line += " | ";
      line += cell;
      if (j + 1 < n) line.append(width[j] - cell.size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace pathdet
