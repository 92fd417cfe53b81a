#pragma once

// Group enumeration by breadth-first closure, and the classification of
// uniform-sign cycles.

#include <deque>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"
#include "signcox/orders.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"
#include "signcox/words.hpp"

namespace signcox {

struct EnumerationResult {
  bool complete = false;
  std::size_t count = 0;  // group order when complete; elements seen otherwise
  std::size_t cap = 0;
};

// Breadth-first closure of {identity} under right multiplication by the
// reflections.  Stops as soon as more than `cap` distinct elements have been
// seen.  Only the frontier holds matrices; visited elements are kept as
// compact byte keys, so memory stays modest even near the default cap.
inline EnumerationResult bfs_enumerate(const Representation& rep,
                                       std::size_t cap = 200000) {
  std::unordered_set<std::string> visited;
  std::deque<ExactMatrix> frontier;
  ExactMatrix id = ExactMatrix::identity(rep.bform.dim());
  visited.insert(canonical_key(id));
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    ExactMatrix m = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= rep.graph.n; ++i) {
      ExactMatrix next = matmul(m, rep.reflection(i));
      if (visited.insert(canonical_key(next)).second) {
        if (visited.size() > cap)
          return {false, visited.size(), cap};
        frontier.push_back(std::move(next));
      }
    }
  }
  return {true, visited.size(), cap};
}

enum class CycleClass { affine_S_tilde, coxeter_D };

inline const char* to_string(CycleClass c) {
  return c == CycleClass::affine_S_tilde ? "affine_S_tilde" : "coxeter_D";
}

// Uniform-sign cycles split into two classes:
//   all +1, or all -1 with even n  ->  the affine symmetric group (infinite);
//   all -1 with odd n              ->  the finite Coxeter group D_n.
inline CycleClass classify_cycle(const SignedCoxeterGraph& g) {
  if (g.shape != GraphShape::cycle)
    throw PreconditionError("classify_cycle: needs a cycle");
  for (int i = 2; i <= g.n; ++i)
    if (g.sign(i) != g.sign(1))
      throw PreconditionError("classify_cycle: needs uniform signs");
  if (g.sign(1) == 1 || g.n % 2 == 0) return CycleClass::affine_S_tilde;
  return CycleClass::coxeter_D;
}

// On an odd all-minus cycle, the element t = hat(2, n, 2) behaves as the
// extra node of a D-type diagram over s_1..s_{n-1}:
//   t^2 = 1,  (s_1 t)^2 = 1,  (t s_2)^3 = 1,  (t s_k)^2 = 1 for 3 <= k < n,
// and as a consequence of the realization, s_1 s_n has order 3.
inline std::vector<IdentityReport> verify_dn_transform(
    const Representation& rep) {
  const SignedCoxeterGraph& g = rep.graph;
  if (g.shape != GraphShape::cycle || g.n % 2 == 0)
    throw PreconditionError("verify_dn_transform: needs an odd cycle");
  for (int i = 1; i <= g.n; ++i)
    if (g.sign(i) != -1)
      throw PreconditionError("verify_dn_transform: needs all -1 signs");

  const std::size_t n = rep.bform.dim();
  const ExactMatrix id = ExactMatrix::identity(n);
  std::vector<IdentityReport> out;

  const Word t_word = build_hat_word(g, 2, g.n, 2);
  const ExactMatrix t = evaluate(rep, t_word);

  out.push_back(make_matrix_report("dn-new-node-involution",
                                   "t=hat(2,n,2)", matmul(t, t), id));
  out.push_back(make_matrix_report(
      "dn-new-node-commutes", "pair=(1,t)",
      matpow(matmul(rep.reflection(1), t), 2), id));
  out.push_back(make_matrix_report("dn-new-node-braid", "pair=(t,2)",
                                   matpow(matmul(t, rep.reflection(2)), 3),
                                   id));
  for (int k = 3; k < g.n; ++k) {
    std::ostringstream params;
    params << "pair=(t," << k << ")";
    out.push_back(make_matrix_report(
        "dn-new-node-commutes", params.str(),
        matpow(matmul(t, rep.reflection(k)), 2), id));
  }

  OrderResult ord = element_order(rep, {1, g.n});
  std::ostringstream note;
  if (ord.finite)
    note << "order " << ord.value;
  else
    note << "infinite order";
  out.push_back(make_flag_report("dn-wrap-pair-order", "pair=(1,n)",
                                 ord.finite && ord.value == 3, note.str()));
  return out;
}

struct ClassificationEvidence {
  CycleClass label;
  std::vector<IdentityReport> evidence;
};

// Classification plus three independent lines of evidence:
//   (1) the form is degenerate exactly in the affine class;
//   (2) enumeration under a cap: completing contradicts the affine label,
//       and a completed D-class count must equal 2^(n-1) n!;
//   (3) on the D class, the diagram-transformation relations above.
// Enumeration that exceeds the cap is recorded as consistent-but-inconclusive.
inline ClassificationEvidence classify_with_evidence(const Representation& rep,
                                                     std::size_t cap = 10000) {
  const SignedCoxeterGraph& g = rep.graph;
  ClassificationEvidence result{classify_cycle(g), {}};
  const bool affine = result.label == CycleClass::affine_S_tilde;

  const bool degenerate = is_degenerate(rep);
  result.evidence.push_back(make_flag_report(
      "classify-degeneracy", affine ? "expect degenerate" : "expect regular",
      degenerate == affine,
      degenerate ? "form is degenerate" : "form is non-degenerate"));

  EnumerationResult enumr = bfs_enumerate(rep, cap);
  std::ostringstream eparams;
  eparams << "cap=" << enumr.cap;
  if (!enumr.complete) {
    result.evidence.push_back(
        make_flag_report("classify-enumeration", eparams.str(), true,
                         "exceeded cap (consistent, inconclusive)"));
  } else if (affine) {
    std::ostringstream note;
    note << "affine class but enumeration completed with " << enumr.count
         << " elements";
    result.evidence.push_back(
        make_flag_report("classify-enumeration", eparams.str(), false,
                         note.str()));
  } else {
    Int expected = 1;
    for (int k = 2; k <= g.n; ++k) expected *= k;
    expected <<= (g.n - 1);  // 2^(n-1) * n!
    std::ostringstream note;
    note << "complete with " << enumr.count << " elements, expected "
         << expected.str();
    result.evidence.push_back(make_flag_report(
        "classify-enumeration", eparams.str(),
        Int(static_cast<unsigned long>(enumr.count)) == expected,
        note.str()));
  }

  if (!affine) {
    std::vector<IdentityReport> dn = verify_dn_transform(rep);
    result.evidence.insert(result.evidence.end(),
                           std::make_move_iterator(dn.begin()),
                           std::make_move_iterator(dn.end()));
  }
  return result;
}

}  // namespace signcox
