#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet {

enum class GraphErrorKind {
  kParse,            // not valid JSON, wrong shape, unknown fields
  kAcyclicity,       // edge with from >= to
  kMultiColor,       // the same color twice on one ordered pair
  kDuplicateEdge,    // two entries for the same (from, to)
  kRange,            // vertex or color outside its range
  kColorCount,       // k <= 0
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

// Unvalidated graph description, as read from input. Signed fields so that
// negative values survive long enough to be reported.
struct RawEdge {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::vector<std::int64_t> colors;
};

struct RawGraph {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<RawEdge> edges;
};

struct ColoredEdge {
  Vertex from;
  Vertex to;
  std::vector<Color> colors;  // sorted, nonempty

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

// A k-colored acyclic digraph on the vertex set {1..n}. Every edge goes from
// a smaller to a larger label, and each ordered pair carries a set of
// distinct colors from {1..k}. Immutable once validated.
class ColoredDigraph {
 public:
  static ColoredDigraph validate(const RawGraph& raw);

  // Each (i < j, color) triple is included independently with probability
  // `density`. The generator is std::mt19937_64 seeded with `seed`; one 64-bit
  // draw per triple, scanned in (i, j, color) lexicographic order, mapped to
  // [0, 1) via its top 53 bits.
  static ColoredDigraph random(std::uint32_t n, std::uint32_t k, double density,
                               std::uint64_t seed);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }

  // Colors on (from, to), sorted; empty for absent pairs and for from >= to.
  std::span<const Color> colors(Vertex from, Vertex to) const;
  bool has_edge(Vertex from, Vertex to, Color color) const;

  // Edges with at least one color, ordered by (from, to).
  std::vector<ColoredEdge> edges() const;

  RawGraph to_raw() const;

  friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

 private:
  ColoredDigraph(std::uint32_t n, std::uint32_t k)
      : n_(n), k_(k), colors_(static_cast<std::size_t>(n) * n) {}

  std::size_t slot(Vertex from, Vertex to) const {
    return static_cast<std::size_t>(from - 1) * n_ + (to - 1);
  }

  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<std::vector<Color>> colors_;
};

// Strict JSON ingest: {"n": .., "k": .., "edges": [{"from", "to", "colors"}]}.
// Unknown fields and duplicate (from, to) entries are rejected.
RawGraph raw_graph_from_json(const nlohmann::json& j);
ColoredDigraph graph_from_json(const nlohmann::json& j);
ColoredDigraph graph_from_json_text(const std::string& text);
nlohmann::json to_json(const ColoredDigraph& g);

struct ColoredPath {
  std::vector<Vertex> vertices;   // strictly increasing, nonempty
  std::vector<Color> edge_colors; // edge_colors[m] colors vertices[m] -> vertices[m+1]

  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
  friend auto operator<=>(const ColoredPath&, const ColoredPath&) = default;
};

// Every colored path of `g`, single vertices included, sorted by vertex list
// and then by color list.
std::vector<ColoredPath> enumerate_colored_paths(const ColoredDigraph& g);

// True when `p` is a path of `g` (increasing vertices, each step colored by
// one of the edge's colors).
bool is_path_of(const ColoredPath& p, const ColoredDigraph& g);

// "1 -c1-> 2 -c1-> 4"
std::string format(const ColoredPath& p);

}  // namespace pathdet
