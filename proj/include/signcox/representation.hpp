#pragma once

// The standard geometric realization of a signed diagram.
//
// On the lattice Z^n with basis e_1..e_n, a diagram induces
//   - a symmetric bilinear form B with B(e_i, e_i) = 2 * sign(i) and
//     B(e_i, e_j) = -1 when i, j are joined, 0 otherwise;
//   - one reflection matrix per vertex, acting by
//       e_i -> -e_i,
//       e_j -> e_j                (i, j not joined)
//       e_j -> e_j + sign(i) e_i  (i, j joined).
// Matrices act on column vectors: column j holds the image of e_j.  Each
// reflection differs from the identity in row i only; that row (of the
// difference) is the vector nu_i with entry -2 at position i and sign(i) at
// each neighbour.

#include <vector>

#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"

namespace signcox {

inline ExactMatrix bilinear_form(const SignedCoxeterGraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  ExactMatrix b(n);
  for (int i = 1; i <= g.n; ++i) {
    b(i - 1, i - 1) = 2 * g.sign(i);
    for (int j = 1; j <= g.n; ++j)
      if (j != i && g.adjacent(i, j)) b(i - 1, j - 1) = -1;
  }
  return b;
}

inline std::vector<ExactMatrix> reflections(const SignedCoxeterGraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<ExactMatrix> out;
  out.reserve(n);
  for (int i = 1; i <= g.n; ++i) {
    ExactMatrix pi = ExactMatrix::identity(n);
    pi(i - 1, i - 1) = -1;
    for (int j : g.neighbors(i)) pi(i - 1, j - 1) = g.sign(i);
    out.push_back(std::move(pi));
  }
  return out;
}

struct Representation {
  SignedCoxeterGraph graph;
  ExactMatrix bform;
  std::vector<ExactMatrix> refl;  // refl[i-1] is the reflection at vertex i

  const ExactMatrix& reflection(int i) const {
    return refl[static_cast<std::size_t>(i) - 1];
  }
};

inline Representation make_representation(const SignedCoxeterGraph& g) {
  // Graph construction already guarantees bond labels in {1,2,3}, so there is
  // no extra laced-ness check to do here.
  return Representation{g, bilinear_form(g), reflections(g)};
}

// tau_i = pi_i - identity: a rank-one matrix supported on row i.
inline ExactMatrix tau(const Representation& rep, int i) {
  if (i < 1 || i > rep.graph.n)
    throw PreconditionError("tau: vertex index out of range");
  return rep.reflection(i) - ExactMatrix::identity(rep.bform.dim());
}

// The single nonzero row of tau_i, as a length-n vector:
// entry i is -2, entries at neighbours of i equal sign(i), all else 0.
inline std::vector<Int> nu(const Representation& rep, int i) {
  if (i < 1 || i > rep.graph.n)
    throw PreconditionError("nu: vertex index out of range");
  std::vector<Int> row(static_cast<std::size_t>(rep.graph.n));
  row[static_cast<std::size_t>(i) - 1] = -2;
  for (int j : rep.graph.neighbors(i))
    row[static_cast<std::size_t>(j) - 1] = rep.graph.sign(i);
  return row;
}

inline bool is_degenerate(const Representation& rep) {
  return det(rep.bform) == 0;
}

}  // namespace signcox
