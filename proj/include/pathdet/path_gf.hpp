#pragma once

#include <vector>

#include "pathdet/digraph.hpp"
#include "pathdet/polynomial.hpp"

namespace pathdet {

// 1 + sum over colored paths i_1 -> ... -> i_t of
//   x_{i_1}^{(r_1)} ... x_{i_{t-1}}^{(r_{t-1})} * (x_{i_t}^{(1)} + ... + x_{i_t}^{(k)}).
// The final vertex has no outgoing step, so its color is free.
Polynomial path_generating_function(const ColoredDigraph& g);

// A word of letters with strictly increasing vertex indices ("nice").
// The empty word stands for 1.
struct Word {
  std::vector<Variable> letters;

  bool is_nice() const;
  Monomial monomial() const;

  friend bool operator==(const Word&, const Word&) = default;
};

// (first, second) with first.vertex < second.vertex is bad when the graph has
// no edge first.vertex -> second.vertex in first's color. The color of
// `second` never matters.
bool is_bad_pair(const ColoredDigraph& g, Variable first, Variable second);

// Nice words with no bad pair in consecutive position, the empty word
// included. Every letter but the last is pinned to an outgoing edge color;
// the last letter ranges over all k colors.
std::vector<Word> enumerate_best_words(const ColoredDigraph& g);

// Commutative image of the sum of all best words.
Polynomial best_word_sum(const ColoredDigraph& g);

}  // namespace pathdet
