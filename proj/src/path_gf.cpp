#include "pathdet/path_gf.hpp"

namespace pathdet {

Polynomial path_generating_function(const ColoredDigraph& g) {
  PolynomialAccumulator acc;
  acc.add_term(Monomial{}, 1);
  for (const ColoredPath& p : enumerate_colored_paths(g)) {
    std::vector<Factor> stem;
    for (std::size_t m = 0; m < p.edge_colors.size(); ++m) {
      stem.push_back({Variable{p.vertices[m], p.edge_colors[m]}, 1});
    }
    for (Color last = 1; last <= g.k(); ++last) {
      std::vector<Factor> factors = stem;
      factors.push_back({Variable{p.vertices.back(), last}, 1});
      acc.add_term(Monomial::from_factors(std::move(factors)), 1);
    }
  }
  return acc.finish();
}

bool Word::is_nice() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1].vertex() >= letters[i].vertex()) return false;
  }
  return true;
}

Monomial Word::monomial() const {
  std::vector<Factor> factors;
  factors.reserve(letters.size());
  for (Variable v : letters) factors.push_back({v, 1});
  return Monomial::from_factors(std::move(factors));
}

bool is_bad_pair(const ColoredDigraph& g, Variable first, Variable second) {
  return !g.has_edge(first.vertex(), second.vertex(), first.color());
}

namespace {

// Grows nice words left to right. A word that already contains a bad
// consecutive pair keeps it under every extension, so such branches are cut.
void grow_words(const ColoredDigraph& g, Word& current, std::vector<Word>& out) {
  out.push_back(current);
  Vertex start = current.letters.empty() ? 1 : current.letters.back().vertex() + 1;
  for (Vertex v = start; v <= g.n(); ++v) {
    for (Color c = 1; c <= g.k(); ++c) {
      Variable letter{v, c};
      if (!current.letters.empty() && is_bad_pair(g, current.letters.back(), letter)) continue;
      current.letters.push_back(letter);
      grow_words(g, current, out);
      current.letters.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> enumerate_best_words(const ColoredDigraph& g) {
  std::vector<Word> out;
  Word empty;
  grow_words(g, empty, out);
  return out;
}

Polynomial best_word_sum(const ColoredDigraph& g) {
  PolynomialAccumulator acc;
  for (const Word& w : enumerate_best_words(g)) acc.add_term(w.monomial(), 1);
  return acc.finish();
}

}  // namespace pathdet
