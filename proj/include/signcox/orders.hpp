#pragma once

// Orders of elements in the matrix realization.
//
// An integer matrix of finite multiplicative order is conjugate (over C) to
// a diagonal matrix of roots of unity, so its order divides
//   B(n) = max { lcm(d_1..d_k) : phi(d_1) + ... + phi(d_k) <= n },
// the classical bound on torsion in GL_n(Z).  matrix_order() therefore only
// has to scan powers up to B(n): if none of them is the identity, the
// element has infinite order.

#include <cstdint>
#include <numeric>
#include <vector>

#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/representation.hpp"
#include "signcox/words.hpp"

namespace signcox {

struct OrderResult {
  bool finite = false;
  unsigned long value = 0;  // meaningful only when finite
};

namespace detail {

inline void torsion_bound_search(const std::vector<unsigned long>& cands,
                                 const std::vector<unsigned long>& phis,
                                 std::size_t from, unsigned long budget,
                                 unsigned long lcm_so_far,
                                 unsigned long& best) {
  if (lcm_so_far > best) best = lcm_so_far;
  for (std::size_t t = from; t < cands.size(); ++t) {
    if (phis[t] > budget) continue;
    unsigned long g = std::gcd(lcm_so_far, cands[t]);
    torsion_bound_search(cands, phis, t + 1, budget - phis[t],
                         lcm_so_far / g * cands[t], best);
  }
}

}  // namespace detail

inline unsigned long torsion_bound(unsigned long n) {
  if (n == 0) return 1;
  // Candidate orders d >= 2 with phi(d) <= n.  phi(d) >= sqrt(d/2), so
  // d <= 2 n^2 is a safe cutoff.
  std::vector<unsigned long> cands, phis;
  for (unsigned long d = 2; d <= 2 * n * n + 2; ++d) {
    unsigned long p = detail::euler_phi(d);
    if (p <= n) {
      cands.push_back(d);
      phis.push_back(p);
    }
  }
  unsigned long best = 1;
  detail::torsion_bound_search(cands, phis, 0, n, 1, best);
  return best;
}

namespace detail {

// Sound early exit: a finite-order integer matrix has all eigenvalues on the
// unit circle, hence |trace| <= n.  A trace of larger magnitude at any power
// proves infinite order.  The entry-size cutoff is a second, generous guard
// (2^64); it is validated against the plain scan by a differential test.
inline bool growth_rules_out_finite(const ExactMatrix& m) {
  const Int cap = Int(1) << 64;
  Int t = trace(m);
  if (t < 0) t = -t;
  if (t > Int(m.dim())) return true;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Int v = m(i, j);
      if (v < 0) v = -v;
      if (v > cap) return true;
    }
  return false;
}

}  // namespace detail

// Multiplicative order of an invertible integer matrix: the least k >= 1
// with m^k = 1, scanning k up to torsion_bound(n); anything beyond is
// infinite.  Requires det(m) = +-1 (m must be invertible over Z).
// `accelerated` enables the growth-based early exit.
inline OrderResult matrix_order(const ExactMatrix& m,
                                bool accelerated = false) {
  const Int d = det(m);
  if (d != 1 && d != -1)
    throw PreconditionError(
        "matrix_order: matrix is not invertible over the integers");
  const unsigned long bound = torsion_bound(m.dim());
  ExactMatrix power = m;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (power.is_identity()) return {true, k};
    if (accelerated && detail::growth_rules_out_finite(power))
      return {false, 0};
    power = matmul(power, m);
  }
  return {false, 0};
}

inline OrderResult element_order(const Representation& rep, const Word& w,
                                 bool accelerated = false) {
  return matrix_order(evaluate(rep, w), accelerated);
}

}  // namespace signcox
