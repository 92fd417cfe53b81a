#pragma once

// The tau calculus: collapse rules for products of the rank-one matrices
// tau_i = pi_i - 1, and the verification routines built on them.
//
// Everything follows from tau_i = e_i nu_i^T (column e_i times the support
// row nu_i), which gives tau_i tau_j = (nu_i)_j * e_i nu_j^T.  In particular
// a product of taus is either zero or a scalar multiple of E * tau_last,
// where E swaps the first and last index of the chain.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signcox/dickson.hpp"
#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"
#include "signcox/words.hpp"

namespace signcox {

// Literal product tau_{i_1} * ... * tau_{i_k}.  Empty chains are rejected
// (an empty tau product has no sensible value; the empty *word* is handled
// by evaluate()).
inline ExactMatrix tau_chain_product(const Representation& rep,
                                     const std::vector<int>& indices) {
  if (indices.empty())
    throw PreconditionError("tau_chain_product: empty chain");
  ExactMatrix m = tau(rep, indices[0]);
  for (std::size_t t = 1; t < indices.size(); ++t)
    m = matmul(m, tau(rep, indices[t]));
  return m;
}

// The collapse rule: the chain is zero as soon as two *distinct* adjacent
// indices are not joined in the diagram; otherwise it equals
//   (-2)^(# equal adjacent pairs) * prod_{distinct adjacent pairs} sign(left)
//     * E_{first,last} * tau_last,
// with E_{i,i} read as the identity.  Both factors are the entries
// (nu_{i_t})_{i_{t+1}}: -2 on a repeat, sign(i_t) across a bond.
inline ExactMatrix chain_closed_form(const Representation& rep,
                                     const std::vector<int>& indices) {
  if (indices.empty())
    throw PreconditionError("chain_closed_form: empty chain");
  const SignedCoxeterGraph& g = rep.graph;
  Int scalar = 1;
  for (std::size_t t = 0; t + 1 < indices.size(); ++t) {
    const int a = indices[t], b = indices[t + 1];
    if (a == b) {
      scalar *= -2;
    } else if (g.m(a, b) == 3) {
      scalar *= g.sign(a);
    } else {
      return ExactMatrix(rep.bform.dim());  // zero matrix
    }
  }
  ExactMatrix e =
      basis_swap_matrix(rep.bform.dim(), static_cast<std::size_t>(indices.front()),
                        static_cast<std::size_t>(indices.back()));
  return scalar * matmul(e, tau(rep, indices.back()));
}

inline IdentityReport verify_tau_chain(const Representation& rep,
                                       const std::vector<int>& indices) {
  std::ostringstream params;
  params << "chain=" << word_to_string(indices);
  return make_matrix_report("tau-chain-collapse", params.str(),
                            tau_chain_product(rep, indices),
                            chain_closed_form(rep, indices));
}

// Every nonzero tau product is supported on a single row (the first chain
// index) and that row is an integer multiple of nu_{last}.  A zero product
// passes vacuously.
inline IdentityReport verify_row_support(const Representation& rep,
                                         const std::vector<int>& indices) {
  std::ostringstream params;
  params << "chain=" << word_to_string(indices);
  ExactMatrix p = tau_chain_product(rep, indices);
  if (p.is_zero())
    return make_flag_report("row-support", params.str(), true,
                            "zero product (vacuous)");
  const std::size_t n = p.dim();
  const std::size_t row = static_cast<std::size_t>(indices.front()) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (p(i, j) != 0)
        return make_flag_report("row-support", params.str(), false,
                                "support outside the leading row");
  }
  const std::vector<Int> base = nu(rep, indices.back());
  // the diagonal entry of nu is always -2, so a ratio is always extractable
  const std::size_t anchor = static_cast<std::size_t>(indices.back()) - 1;
  if (p(row, anchor) % base[anchor] != 0)
    return make_flag_report("row-support", params.str(), false,
                            "row is not an integer multiple of nu_last");
  const Int c = p(row, anchor) / base[anchor];
  for (std::size_t j = 0; j < n; ++j)
    if (p(row, j) != c * base[j])
      return make_flag_report("row-support", params.str(), false,
                              "row is not proportional to nu_last");
  std::ostringstream note;
  note << "multiple " << c.str();
  return make_flag_report("row-support", params.str(), true, note.str());
}

// --- basic tau relations, swept over the whole diagram ----------------------

inline std::vector<IdentityReport> verify_tau_basic(const Representation& rep,
                                                    int max_power = 6) {
  const SignedCoxeterGraph& g = rep.graph;
  const std::size_t n = rep.bform.dim();
  const ExactMatrix id = ExactMatrix::identity(n);
  std::vector<IdentityReport> out;

  for (int i = 1; i <= g.n; ++i) {
    ExactMatrix ti = tau(rep, i);
    std::ostringstream pi;
    pi << "i=" << i;
    out.push_back(make_matrix_report("tau-square", pi.str(), matmul(ti, ti),
                                     Int(-2) * ti));
    out.push_back(make_matrix_report("tau-absorb-right", pi.str(),
                                     matmul(id + ti, ti), Int(-1) * ti));
    out.push_back(make_matrix_report("tau-absorb-left", pi.str(),
                                     matmul(ti, id + ti), Int(-1) * ti));
  }

  for (int i = 1; i <= g.n; ++i) {
    for (int j = 1; j <= g.n; ++j) {
      if (i == j) continue;
      ExactMatrix ti = tau(rep, i), tj = tau(rep, j);
      ExactMatrix titj = matmul(ti, tj);
      std::ostringstream pij;
      pij << "i=" << i << " j=" << j;
      if (g.m(i, j) == 2) {
        out.push_back(make_matrix_report("tau-orthogonal", pij.str(), titj,
                                         ExactMatrix(n)));
        continue;
      }
      const Int fi = g.sign(i), fj = g.sign(j);
      ExactMatrix e = basis_swap_matrix(n, static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j));
      out.push_back(make_matrix_report("tau-pair-collapse", pij.str(), titj,
                                       fi * matmul(e, tj)));
      out.push_back(make_matrix_report("tau-sandwich", pij.str(),
                                       matmul(titj, ti), fi * fj * ti));
      ExactMatrix pw = titj;
      Int coef_pow = 1;  // (f_i f_j)^{k-1}
      for (int k = 1; k <= max_power; ++k) {
        std::ostringstream pk;
        pk << pij.str() << " k=" << k;
        // (tau_i tau_j)^k = (f_i f_j)^{k-1} tau_i tau_j
        //                 = f_i^k f_j^{k-1} * E * tau_j
        out.push_back(make_matrix_report("tau-pair-power", pk.str(), pw,
                                         coef_pow * titj));
        out.push_back(make_matrix_report("tau-pair-power-return", pk.str(),
                                         matmul(pw, ti),
                                         coef_pow * fi * fj * ti));
        pw = matmul(pw, titj);
        coef_pow *= fi * fj;
      }
    }
  }
  return out;
}

// --- arc sums and the hat-word factorization --------------------------------

namespace detail {

// Vertices of the ascent from a to b: on a line a, a+1, ..., b; on a cycle
// the successor walk.  Callers guarantee the walk is well-defined.
inline std::vector<int> ascent_range(const SignedCoxeterGraph& g, int a,
                                     int b) {
  std::vector<int> out;
  if (g.shape == GraphShape::cycle) {
    int v = a;
    out.push_back(v);
    while (v != b) {
      v = g.succ(v);
      out.push_back(v);
    }
  } else {
    for (int v = a; v <= b; ++v) out.push_back(v);
  }
  return out;
}

}  // namespace detail

// Sum of the literal chains tau over hat(k1, j, k2), k1 running over the
// ascent from i1 to j and k2 over the ascent from i2 to j.
inline ExactMatrix tau_arc_sum(const Representation& rep, int i1, int j,
                               int i2) {
  const SignedCoxeterGraph& g = rep.graph;
  ExactMatrix sum(rep.bform.dim());
  for (int k1 : detail::ascent_range(g, i1, j))
    for (int k2 : detail::ascent_range(g, i2, j)) {
      Word w = build_hat_word(g, k1, j, k2);
      sum = sum + tau_chain_product(rep, w);
    }
  return sum;
}

// The product of reflections along hat(i, j, i) equals 1 + (arc sum): the
// hat word is s_j conjugated down the ascent from i, and expanding the
// conjugation telescopes into exactly the double sum of chains.  The
// telescoping needs the two boundary indices to coincide; an asymmetric
// triple (i1 != i2) leaves extra one-sided chains behind, so those are
// rejected (the tests pin concrete counterexamples via tau_arc_sum).
// Valid triples: i1 = i2 <= j on a line; on a cycle, i1 = i2 with ascent
// offset (j - i1) mod n in [0, n-2].  Offset n-1 would wrap the whole
// cycle and is rejected as well.
inline IdentityReport verify_tau_middle(const Representation& rep, int i1,
                                        int j, int i2) {
  const SignedCoxeterGraph& g = rep.graph;
  auto in_range = [&g](int v) { return v >= 1 && v <= g.n; };
  if (!in_range(i1) || !in_range(j) || !in_range(i2))
    throw PreconditionError("verify_tau_middle: vertex index out of range");
  if (i1 != i2)
    throw PreconditionError(
        "verify_tau_middle: boundary indices must coincide (i1 = i2)");
  if (g.shape == GraphShape::cycle) {
    const int d = (j - i1 + g.n) % g.n;
    if (d > g.n - 2)
      throw PreconditionError(
          "verify_tau_middle: arc offset must lie in [0, n-2]");
  } else if (g.shape == GraphShape::line) {
    if (i1 > j)
      throw PreconditionError("verify_tau_middle: need i1 <= j");
  } else {
    throw PreconditionError("verify_tau_middle: needs a line or a cycle");
  }
  std::ostringstream params;
  params << "i1=" << i1 << " j=" << j << " i2=" << i2;
  Word w = build_hat_word(g, i1, j, i2);
  ExactMatrix lhs = evaluate(rep, w);
  ExactMatrix rhs =
      ExactMatrix::identity(rep.bform.dim()) + tau_arc_sum(rep, i1, j, i2);
  return make_matrix_report("hat-word-arc-sum", params.str(), lhs, rhs);
}

// --- cycle sign invariant ----------------------------------------------------

// kappa(i, j) on a cycle: the product of the signs strictly inside the arc
// from i up to j, plus the product strictly inside the arc from j up to i.
// Values lie in {-2, 0, 2}; zero iff the two arc interiors carry opposite
// sign products, i.e. iff (prod of all signs) / (sign(i) sign(j)) = -1.
inline int compute_kappa(const SignedCoxeterGraph& g, int i, int j) {
  if (g.shape != GraphShape::cycle)
    throw PreconditionError("compute_kappa: needs a cycle");
  if (i < 1 || i > g.n || j < 1 || j > g.n || i == j)
    throw PreconditionError("compute_kappa: needs two distinct vertices");
  int prod1 = 1;
  for (int v = g.succ(i); v != j; v = g.succ(v)) prod1 *= g.sign(v);
  int prod2 = 1;
  for (int v = g.succ(j); v != i; v = g.succ(v)) prod2 *= g.sign(v);
  return prod1 + prod2;
}

// --- the commutator-difference identities ------------------------------------

enum class DicksonMode { two_gen, line, cycle };

inline const char* to_string(DicksonMode m) {
  switch (m) {
    case DicksonMode::two_gen: return "two_gen";
    case DicksonMode::line: return "line";
    default: return "cycle";
  }
}

// Checks, for the given pair (i, j) and exponent r >= 1, the pair of closed
// forms for the alternating products built from a = 1 + A and b = 1 + B:
//
//   (ab)^r - (ba)^r         = (f_i f_j)^(r-1) * [E_{2r-1}(x, f_i f_j)/x] * M
//   (ab)^r a - (ba)^r b     = (f_i f_j)^r     * E_{2r}(x, f_i f_j)      * N
//
// where E_{2r-1}(x, .)/x is the polynomial quotient (dickson_e_over_x) and
// (A, B, x, M, N) depend on the mode:
//   two_gen: A = tau_i, B = tau_j (i, j joined), x = 1,
//            M = E_{i,j} (f_i tau_j - f_j tau_i),  N = tau_i - tau_j;
//   line:    A = tau_i, B = pi(hat(i+1, j, i+1)) - 1 on a line with i < j,
//            x = 1, M = AB - BA, N = A - B;
//   cycle:   A = pi(hat(j+1, i, j+1)) - 1, B = pi(hat(i+1, j, i+1)) - 1 on a
//            cycle with j != i, i-1; x = kappa(i, j), M = AB - BA, N = A - B.
//
// The normalization by x in the even form is forced by the sandwich
// relation ABA = x^2 f_i f_j A: each round trip through the pair crosses
// the connecting sign paths twice, while the commutator M carries only one
// crossing.  At x = 1 (two_gen, line) the quotient coincides with E_{2r-1},
// and at x = kappa = 0 the two arc reflections commute, so both sides
// vanish and the even form degenerates to the order-two relation.
inline std::pair<IdentityReport, IdentityReport> verify_dickson_identity(
    const Representation& rep, DicksonMode mode, int i, int j,
    unsigned long r) {
  const SignedCoxeterGraph& g = rep.graph;
  if (i < 1 || i > g.n || j < 1 || j > g.n)
    throw PreconditionError("verify_dickson_identity: vertex out of range");
  if (r < 1) throw PreconditionError("verify_dickson_identity: need r >= 1");
  const std::size_t n = rep.bform.dim();
  const ExactMatrix id = ExactMatrix::identity(n);

  ExactMatrix A(n), B(n), Me(n), Mo(n);
  Int x = 1;
  switch (mode) {
    case DicksonMode::two_gen: {
      if (i == j || g.m(i, j) != 3)
        throw PreconditionError(
            "verify_dickson_identity: two_gen needs joined vertices");
      A = tau(rep, i);
      B = tau(rep, j);
      ExactMatrix e = basis_swap_matrix(n, static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j));
      Me = matmul(e, Int(g.sign(i)) * B - Int(g.sign(j)) * A);
      Mo = A - B;
      break;
    }
    case DicksonMode::line: {
      if (g.shape != GraphShape::line)
        throw PreconditionError("verify_dickson_identity: needs a line");
      if (i >= j)
        throw PreconditionError("verify_dickson_identity: line needs i < j");
      A = tau(rep, i);
      B = evaluate(rep, build_hat_word(g, i + 1, j, i + 1)) - id;
      Me = matmul(A, B) - matmul(B, A);
      Mo = A - B;
      break;
    }
    case DicksonMode::cycle: {
      if (g.shape != GraphShape::cycle)
        throw PreconditionError("verify_dickson_identity: needs a cycle");
      if (i == j || j == g.pred(i))
        throw PreconditionError(
            "verify_dickson_identity: cycle needs j distinct from i and i-1");
      A = evaluate(rep, build_hat_word(g, g.succ(j), i, g.succ(j))) - id;
      B = evaluate(rep, build_hat_word(g, g.succ(i), j, g.succ(i))) - id;
      Me = matmul(A, B) - matmul(B, A);
      Mo = A - B;
      x = compute_kappa(g, i, j);
      break;
    }
  }

  const Int fifj = Int(g.sign(i)) * Int(g.sign(j));
  ExactMatrix ab = matmul(id + A, id + B);
  ExactMatrix ba = matmul(id + B, id + A);
  ExactMatrix abr = matpow(ab, r);
  ExactMatrix bar = matpow(ba, r);

  Int pow_even = 1;  // (f_i f_j)^{r-1}
  for (unsigned long t = 1; t < r; ++t) pow_even *= fifj;

  std::ostringstream params;
  params << "mode=" << to_string(mode) << " i=" << i << " j=" << j
         << " r=" << r;

  IdentityReport even = make_matrix_report(
      "alternating-even", params.str(), abr - bar,
      (pow_even * dickson_e_over_x(2 * r - 1, x, fifj)) * Me);
  IdentityReport odd = make_matrix_report(
      "alternating-odd", params.str(),
      matmul(abr, id + A) - matmul(bar, id + B),
      (pow_even * fifj * dickson_e(2 * r, x, fifj)) * Mo);
  return {std::move(even), std::move(odd)};
}

// --- vanishing sums of tau products ------------------------------------------

namespace detail {

struct TauTerm {
  Int coeff;
  std::vector<int> chain;
};

// Deterministic pseudo-random nonzero chain: consecutive indices either
// repeat or step to a neighbour, so the closed form never vanishes.
inline std::vector<int> random_nonzero_chain(const SignedCoxeterGraph& g,
                                             std::mt19937& rng,
                                             int max_len = 5) {
  std::uniform_int_distribution<int> vdist(1, g.n);
  std::uniform_int_distribution<int> ldist(2, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> chain{vdist(rng)};
  const int len = ldist(rng);
  while (static_cast<int>(chain.size()) < len) {
    int prev = chain.back();
    std::vector<int> nbrs = g.neighbors(prev);
    if (nbrs.empty() || coin(rng) == 0) {
      chain.push_back(prev);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
      chain.push_back(nbrs[pick(rng)]);
    }
  }
  return chain;
}

}  // namespace detail

// Structural checks on vanishing linear combinations of tau products:
//   - on the all-plus triangle, the three displayed row sums
//     tau_i + tau_i tau_j + tau_i tau_k and their nine-term total vanish;
//   - a deterministically generated vanishing combination is verified to
//     vanish literally, and to decompose into vanishing groups sharing the
//     same leading index (always) and the same (leading, trailing) pair
//     (requires a non-degenerate form, so skipped on degenerate diagrams).
inline IdentityReport verify_sum_support(const Representation& rep) {
  const SignedCoxeterGraph& g = rep.graph;
  const std::size_t n = rep.bform.dim();
  std::ostringstream note;
  bool holds = true;

  const bool plus_triangle =
      g.shape == GraphShape::cycle && g.n == 3 && g.sign(1) == 1 &&
      g.sign(2) == 1 && g.sign(3) == 1;
  if (plus_triangle) {
    ExactMatrix total(n);
    bool rows_ok = true;
    for (int i = 1; i <= 3; ++i) {
      ExactMatrix row_sum = tau(rep, i);
      for (int j = 1; j <= 3; ++j)
        if (j != i) row_sum = row_sum + tau_chain_product(rep, {i, j});
      total = total + row_sum;
      if (!row_sum.is_zero()) rows_ok = false;
    }
    if (!rows_ok || !total.is_zero()) holds = false;
    note << "triangle row sums " << (rows_ok ? "vanish" : "FAIL") << "; ";
  }

  // Seed from the sign pattern so every run of a given diagram is identical.
  std::uint32_t seed = 0x5c0ffee1u + static_cast<std::uint32_t>(g.n);
  for (int i = 1; i <= g.n; ++i)
    seed = seed * 31u + static_cast<std::uint32_t>(g.sign(i) == 1 ? 2 : 1);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> cdist(1, 3);
  std::uniform_int_distribution<int> sdist(0, 1);

  // Each generated chain C collapses to a multiple of E * tau_last, so
  // C * tau_last = -2 C; the pair (C ++ [last], 2 C) therefore cancels.
  std::vector<detail::TauTerm> terms;
  for (int grp = 0; grp < 6; ++grp) {
    std::vector<int> chain = detail::random_nonzero_chain(g, rng);
    Int c = cdist(rng) * (sdist(rng) ? 1 : -1);
    std::vector<int> extended = chain;
    extended.push_back(chain.back());
    terms.push_back({c, std::move(extended)});
    terms.push_back({2 * c, std::move(chain)});
  }

  ExactMatrix total(n);
  std::map<int, ExactMatrix> by_start;
  std::map<std::pair<int, int>, ExactMatrix> by_pair;
  for (const auto& t : terms) {
    ExactMatrix v = t.coeff * tau_chain_product(rep, t.chain);
    total = total + v;
    const int p = t.chain.front(), q = t.chain.back();
    auto& start_slot = by_start.try_emplace(p, ExactMatrix(n)).first->second;
    start_slot = start_slot + v;
    auto& pair_slot =
        by_pair.try_emplace(std::make_pair(p, q), ExactMatrix(n))
            .first->second;
    pair_slot = pair_slot + v;
  }
  if (!total.is_zero()) {
    holds = false;
    note << "combination does not vanish; ";
  }
  bool starts_ok = true;
  for (const auto& [p, m] : by_start)
    if (!m.is_zero()) starts_ok = false;
  if (!starts_ok) holds = false;
  note << "per-start groups " << (starts_ok ? "vanish" : "FAIL");

  if (!is_degenerate(rep)) {
    bool pairs_ok = true;
    for (const auto& [pq, m] : by_pair)
      if (!m.is_zero()) pairs_ok = false;
    if (!pairs_ok) holds = false;
    note << "; per-pair groups " << (pairs_ok ? "vanish" : "FAIL");
  } else {
    note << "; per-pair grouping skipped (degenerate form)";
  }

  return make_flag_report("sum-support", "", holds, note.str());
}

}  // namespace signcox
