#include "pathdet/digraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace pathdet {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kParse: return "parse";
    case GraphErrorKind::kAcyclicity: return "acyclicity";
    case GraphErrorKind::kMultiColor: return "multi-color";
    case GraphErrorKind::kDuplicateEdge: return "duplicate-edge";
    case GraphErrorKind::kRange: return "range";
    case GraphErrorKind::kColorCount: return "color-count";
  }
  return "unknown";
}

namespace {

std::string pair_name(std::int64_t from, std::int64_t to) {
  return "(" + std::to_string(from) + ", " + std::to_string(to) + ")";
}

}  // namespace

ColoredDigraph ColoredDigraph::validate(const RawGraph& raw) {
  if (raw.k <= 0) {
    throw GraphError(GraphErrorKind::kColorCount,
                     "color count must be positive, got " + std::to_string(raw.k));
  }
  if (raw.n < 0 || raw.n > 100000) {
    throw GraphError(GraphErrorKind::kRange,
                     "vertex count out of range: " + std::to_string(raw.n));
  }
  if (raw.k > 100000) {
    throw GraphError(GraphErrorKind::kRange,
                     "color count out of range: " + std::to_string(raw.k));
  }
  ColoredDigraph g(static_cast<std::uint32_t>(raw.n), static_cast<std::uint32_t>(raw.k));
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const RawEdge& e : raw.edges) {
    if (e.from < 1 || e.from > raw.n || e.to < 1 || e.to > raw.n) {
      throw GraphError(GraphErrorKind::kRange,
                       "edge " + pair_name(e.from, e.to) + " has a vertex outside [1.." +
                           std::to_string(raw.n) + "]");
    }
    if (e.from >= e.to) {
      throw GraphError(GraphErrorKind::kAcyclicity,
                       "edge " + pair_name(e.from, e.to) + " must satisfy from < to");
    }
    if (!seen.emplace(e.from, e.to).second) {
      throw GraphError(GraphErrorKind::kDuplicateEdge,
                       "edge " + pair_name(e.from, e.to) + " listed twice");
    }
    auto& slot = g.colors_[g.slot(static_cast<Vertex>(e.from), static_cast<Vertex>(e.to))];
    for (std::int64_t c : e.colors) {
      if (c < 1 || c > raw.k) {
        throw GraphError(GraphErrorKind::kRange,
                         "edge " + pair_name(e.from, e.to) + " has color " +
                             std::to_string(c) + " outside [1.." + std::to_string(raw.k) +
                             "]");
      }
      if (std::find(slot.begin(), slot.end(), static_cast<Color>(c)) != slot.end()) {
        throw GraphError(GraphErrorKind::kMultiColor,
                         "edge " + pair_name(e.from, e.to) + " repeats color " +
                             std::to_string(c));
      }
      slot.push_back(static_cast<Color>(c));
    }
    std::sort(slot.begin(), slot.end());
  }
  return g;
}

ColoredDigraph ColoredDigraph::random(std::uint32_t n, std::uint32_t k, double density,
                                      std::uint64_t seed) {
  if (k == 0) throw GraphError(GraphErrorKind::kColorCount, "color count must be positive");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  ColoredDigraph g(n, k);
  std::mt19937_64 rng(seed);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      auto& slot = g.colors_[g.slot(i, j)];
      for (Color c = 1; c <= k; ++c) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < density) slot.push_back(c);
      }
    }
  }
  return g;
}

std::span<const Color> ColoredDigraph::colors(Vertex from, Vertex to) const {
  if (from < 1 || to < 1 || from > n_ || to > n_ || from >= to) return {};
  return colors_[slot(from, to)];
}

bool ColoredDigraph::has_edge(Vertex from, Vertex to, Color color) const {
  auto cs = colors(from, to);
  return std::binary_search(cs.begin(), cs.end(), color);
}

std::vector<ColoredEdge> ColoredDigraph::edges() const {
  std::vector<ColoredEdge> out;
  for (Vertex i = 1; i <= n_; ++i) {
    for (Vertex j = i + 1; j <= n_; ++j) {
      const auto& cs = colors_[slot(i, j)];
      if (!cs.empty()) out.push_back({i, j, cs});
    }
  }
  return out;
}

RawGraph ColoredDigraph::to_raw() const {
  RawGraph raw{n_, k_, {}};
  for (const ColoredEdge& e : edges()) {
    raw.edges.push_back({e.from, e.to, {e.colors.begin(), e.colors.end()}});
  }
  return raw;
}

// ---------------------------------------------------------------------------

namespace {

void reject_unknown_fields(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* a) { return key == a; });
    if (!ok) throw GraphError(GraphErrorKind::kParse, "unknown field '" + key + "' in " + where);
  }
}

std::int64_t integer_field(const nlohmann::json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw GraphError(GraphErrorKind::kParse, std::string("missing field '") + name + "' in " + where);
  }
  if (!it->is_number_integer()) {
    throw GraphError(GraphErrorKind::kParse, std::string("field '") + name + "' in " + where +
                                                 " must be an integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

RawGraph raw_graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError(GraphErrorKind::kParse, "graph must be a JSON object");
  reject_unknown_fields(j, {"n", "k", "edges"}, "graph");
  RawGraph raw;
  raw.n = integer_field(j, "n", "graph");
  raw.k = integer_field(j, "k", "graph");
  auto edges = j.find("edges");
  if (edges == j.end()) return raw;
  if (!edges->is_array()) throw GraphError(GraphErrorKind::kParse, "'edges' must be an array");
  for (const auto& e : *edges) {
    if (!e.is_object()) throw GraphError(GraphErrorKind::kParse, "edge must be a JSON object");
    reject_unknown_fields(e, {"from", "to", "colors"}, "edge");
    RawEdge edge;
    edge.from = integer_field(e, "from", "edge");
    edge.to = integer_field(e, "to", "edge");
    auto colors = e.find("colors");
    if (colors == e.end() || !colors->is_array()) {
      throw GraphError(GraphErrorKind::kParse, "edge needs a 'colors' array");
    }
    for (const auto& c : *colors) {
      if (!c.is_number_integer()) {
        throw GraphError(GraphErrorKind::kParse, "colors must be integers");
      }
      edge.colors.push_back(c.get<std::int64_t>());
    }
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

ColoredDigraph graph_from_json(const nlohmann::json& j) {
  return ColoredDigraph::validate(raw_graph_from_json(j));
}

ColoredDigraph graph_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(GraphErrorKind::kParse, e.what());
  }
  return graph_from_json(j);
}

nlohmann::json to_json(const ColoredDigraph& g) {
  auto edges = nlohmann::json::array();
  for (const ColoredEdge& e : g.edges()) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"colors", e.colors}});
  }
  return {{"n", g.n()}, {"k", g.k()}, {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------

namespace {

void extend_paths(const ColoredDigraph& g, ColoredPath& current, std::vector<ColoredPath>& out) {
  out.push_back(current);
  Vertex last = current.vertices.back();
  for (Vertex next = last + 1; next <= g.n(); ++next) {
    for (Color c : g.colors(last, next)) {
      current.vertices.push_back(next);
      current.edge_colors.push_back(c);
      extend_paths(g, current, out);
      current.vertices.pop_back();
      current.edge_colors.pop_back();
    }
  }
}

}  // namespace

std::vector<ColoredPath> enumerate_colored_paths(const ColoredDigraph& g) {
  std::vector<ColoredPath> out;
  for (Vertex start = 1; start <= g.n(); ++start) {
    ColoredPath p{{start}, {}};
    extend_paths(g, p, out);
  }
  // Depth-first order interleaves lengths; the contract is (vertices, colors).
  std::sort(out.begin(), out.end());
  return out;
}

bool is_path_of(const ColoredPath& p, const ColoredDigraph& g) {
  if (p.vertices.empty() || p.edge_colors.size() + 1 != p.vertices.size()) return false;
  for (Vertex v : p.vertices) {
    if (v < 1 || v > g.n()) return false;
  }
  for (std::size_t m = 0; m + 1 < p.vertices.size(); ++m) {
    if (p.vertices[m] >= p.vertices[m + 1]) return false;
    if (!g.has_edge(p.vertices[m], p.vertices[m + 1], p.edge_colors[m])) return false;
  }
  return true;
}

std::string format(const ColoredPath& p) {
  std::string out = std::to_string(p.vertices.front());
  for (std::size_t m = 0; m < p.edge_colors.size(); ++m) {
    out += " -c" + std::to_string(p.edge_colors[m]) + "-> " + std::to_string(p.vertices[m + 1]);
  }
  return out;
}

}  // namespace pathdet
