#pragma once

// Words in the generators and the arc ("hat") words.
//
// A word is a sequence of 1-based vertex indices, evaluated literally as a
// product of reflection matrices.  No free reduction is ever applied: the
// point of most checks is precisely whether an unreduced product collapses.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"

namespace signcox {

using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) os << ' ';
    os << w[t];
  }
  return os.str();
}

inline Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("word: letters must be positive integers, got \"" +
                       tok + "\"");
    }
  }
  return w;
}

// The empty word evaluates to the identity matrix.
inline ExactMatrix evaluate(const Representation& rep, const Word& w) {
  ExactMatrix m = ExactMatrix::identity(rep.bform.dim());
  for (int letter : w) {
    if (letter < 1 || letter > rep.graph.n)
      throw PreconditionError("evaluate: word letter out of range");
    m = matmul(m, rep.reflection(letter));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Arc words.  build_hat_word(g, i1, j, i2) produces the letter sequence that
// first ascends i1, i1+1, ..., j and then descends j-1, j-2, ..., i2:
//
//   (j, j, j)   -> [j]
//   (1, 3, 2)   -> [1, 2, 3, 2]
//   (2, 4, 2)   -> [2, 3, 4, 3, 2]
//
// On a line this needs i1 <= j and i2 <= j.  On a cycle "ascend" means
// walking successors, so every argument triple makes sense as long as each
// walk stays within n-1 steps; i1 == j means a zero-length ascent (this pins
// down the otherwise ambiguous wrap: the long way around is requested by
// swapping the roles of i and j in the call, never by a flag).

inline Word build_hat_word(const SignedCoxeterGraph& g, int i1, int j,
                           int i2) {
  const int n = g.n;
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  if (!in_range(i1) || !in_range(j) || !in_range(i2))
    throw PreconditionError("build_hat_word: vertex index out of range");

  Word w;
  if (g.shape == GraphShape::cycle) {
    const int up = (j - i1 + n) % n;    // ascent length
    const int down = (j - i2 + n) % n;  // number of letters after j
    int v = i1;
    for (int t = 0; t < up; ++t) {
      w.push_back(v);
      v = g.succ(v);
    }
    w.push_back(j);
    v = g.pred(j);
    for (int t = 0; t < down; ++t) {
      w.push_back(v);
      v = g.pred(v);
    }
    return w;
  }
  // Treat every non-cycle shape as a line segment in index order.
  if (i1 > j || i2 > j)
    throw PreconditionError("build_hat_word: need i1 <= j and i2 <= j");
  for (int v = i1; v <= j; ++v) w.push_back(v);
  for (int v = j - 1; v >= i2; --v) w.push_back(v);
  return w;
}

// c^{-1} w c as a literal letter sequence; generators are involutions, so
// the inverse of c is its reversal.
inline Word conjugate(const Word& w, const Word& c) {
  Word out(c.rbegin(), c.rend());
  out.insert(out.end(), w.begin(), w.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

// On a cycle whose signs agree at i-1, i, i+1 (cyclically), conjugating the
// arc element s_i * hat(i+1, i-1, i+1) by (s_i s_{i+1}) shifts it one step:
// the result equals s_{i+1} * hat(i+2, i, i+2).  A sign hypothesis that
// fails is reported, not thrown, so sweeps can record it as a non-check.
inline IdentityReport verify_conjugate_shift(const Representation& rep,
                                             int i) {
  const SignedCoxeterGraph& g = rep.graph;
  if (g.shape != GraphShape::cycle)
    throw PreconditionError("verify_conjugate_shift: needs a cycle");
  if (i < 1 || i > g.n)
    throw PreconditionError("verify_conjugate_shift: vertex out of range");

  std::ostringstream params;
  params << "i=" << i;

  const int prev = g.pred(i), next = g.succ(i);
  if (!(g.sign(prev) == g.sign(i) && g.sign(i) == g.sign(next))) {
    return make_flag_report(
        "conjugate-shift", params.str(), true,
        "hypothesis violated: signs at i-1, i, i+1 differ; nothing checked");
  }

  Word lhs_core;
  lhs_core.push_back(i);
  Word arc = build_hat_word(g, next, prev, next);
  lhs_core.insert(lhs_core.end(), arc.begin(), arc.end());
  // conjugator (s_{i+1} s_i): the product is (s_i s_{i+1}) core (s_{i+1} s_i)
  Word conj = {next, i};
  Word lhs = conjugate(lhs_core, conj);

  Word rhs;
  rhs.push_back(next);
  Word arc2 = build_hat_word(g, g.succ(next), i, g.succ(next));
  rhs.insert(rhs.end(), arc2.begin(), arc2.end());

  return make_matrix_report("conjugate-shift", params.str(),
                            evaluate(rep, lhs), evaluate(rep, rhs));
}

}  // namespace signcox
