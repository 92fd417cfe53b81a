#pragma once

// Relator families for lines and cycles, and their verification.
//
// The emitted relators are sound (each one is verified to evaluate to the
// identity matrix) and each exponent is minimal (it equals the order of the
// base element).  No completeness claim is made: the list is the structured
// family below, not a proof that it presents the group.

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signcox/errors.hpp"
#include "signcox/graph.hpp"
#include "signcox/orders.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"
#include "signcox/taucalc.hpp"
#include "signcox/words.hpp"

namespace signcox {

enum class RelatorOrigin {
  involution,
  commuting,
  braid,
  generalized_line,
  cycle_arc_square,
};

inline const char* to_string(RelatorOrigin o) {
  switch (o) {
    case RelatorOrigin::involution: return "involution";
    case RelatorOrigin::commuting: return "commuting";
    case RelatorOrigin::braid: return "braid";
    case RelatorOrigin::generalized_line: return "generalized_line";
    default: return "cycle_arc_square";
  }
}

inline RelatorOrigin relator_origin_from_string(const std::string& s) {
  if (s == "involution") return RelatorOrigin::involution;
  if (s == "commuting") return RelatorOrigin::commuting;
  if (s == "braid") return RelatorOrigin::braid;
  if (s == "generalized_line") return RelatorOrigin::generalized_line;
  if (s == "cycle_arc_square") return RelatorOrigin::cycle_arc_square;
  throw ParseError("presentation: unknown relator origin \"" + s + "\"");
}

struct Relator {
  Word base;
  unsigned long exponent = 1;
  RelatorOrigin origin = RelatorOrigin::involution;

  bool operator==(const Relator& o) const {
    return base == o.base && exponent == o.exponent && origin == o.origin;
  }
};

struct Presentation {
  int n = 0;
  std::vector<Relator> relators;
};

// The structured relator list for a line or a cycle, in a fixed order:
// involutions, commuting pairs, braids, generalized cubes, arc squares.
//
//   - involution: s_i^2 for every vertex;
//   - commuting: (s_i s_j)^2 for every unjoined pair i < j;
//   - braid: (s_i s_{i+1})^3 for joined pairs of equal sign;
//   - generalized cube: (s_i * hat(i+1, j, i+1))^3 whenever sign(i) =
//     sign(j); on a line for i < j, on a cycle for ordered (i, j) with
//     j distinct from i and i-1 (the j = i+1 instances are the braids);
//   - arc square: (hat(j+1, i, j+1) * hat(i+1, j, i+1))^2, once per
//     unordered pair i < j of a cycle, exactly when kappa(i, j) = 0.
//
// Exact duplicates (same base and exponent) are dropped, keeping the first.
inline Presentation generate_presentation(const SignedCoxeterGraph& g) {
  if (g.shape != GraphShape::line && g.shape != GraphShape::cycle)
    throw PreconditionError(
        "generate_presentation: only lines and cycles are supported");

  Presentation p;
  p.n = g.n;
  std::set<std::pair<Word, unsigned long>> seen;
  auto push = [&p, &seen](Word base, unsigned long exponent,
                          RelatorOrigin origin) {
    if (seen.emplace(base, exponent).second)
      p.relators.push_back({std::move(base), exponent, origin});
  };

  for (int i = 1; i <= g.n; ++i) push({i}, 2, RelatorOrigin::involution);

  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.m(i, j) == 2) push({i, j}, 2, RelatorOrigin::commuting);

  if (g.shape == GraphShape::line) {
    for (int i = 1; i < g.n; ++i)
      if (g.sign(i) == g.sign(i + 1))
        push({i, i + 1}, 3, RelatorOrigin::braid);
    for (int i = 1; i <= g.n; ++i)
      for (int j = i + 2; j <= g.n; ++j) {
        if (g.sign(i) != g.sign(j)) continue;
        Word base{i};
        Word arc = build_hat_word(g, i + 1, j, i + 1);
        base.insert(base.end(), arc.begin(), arc.end());
        push(std::move(base), 3, RelatorOrigin::generalized_line);
      }
    return p;
  }

  // cycle
  for (int i = 1; i <= g.n; ++i) {
    const int j = g.succ(i);
    if (g.sign(i) == g.sign(j)) push({i, j}, 3, RelatorOrigin::braid);
  }
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j) {
      if (j == i || j == g.succ(i) || j == g.pred(i)) continue;
      if (g.sign(i) != g.sign(j)) continue;
      Word base{i};
      Word arc = build_hat_word(g, g.succ(i), j, g.succ(i));
      base.insert(base.end(), arc.begin(), arc.end());
      push(std::move(base), 3, RelatorOrigin::generalized_line);
    }
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      if (compute_kappa(g, i, j) != 0) continue;
      Word base = build_hat_word(g, g.succ(j), i, g.succ(j));
      Word arc = build_hat_word(g, g.succ(i), j, g.succ(i));
      base.insert(base.end(), arc.begin(), arc.end());
      push(std::move(base), 2, RelatorOrigin::cycle_arc_square);
    }
  return p;
}

inline std::string relator_to_string(const Relator& r) {
  std::ostringstream os;
  if (r.base.size() == 1) {
    os << "s" << r.base[0] << "^" << r.exponent;
    return os.str();
  }
  os << "(";
  for (std::size_t t = 0; t < r.base.size(); ++t) {
    if (t) os << "*";
    os << "s" << r.base[t];
  }
  os << ")^" << r.exponent;
  return os.str();
}

// Each relator, checked as a matrix identity: evaluate(base)^exponent = 1.
inline std::vector<IdentityReport> verify_presentation(
    const Representation& rep, const Presentation& p) {
  std::vector<IdentityReport> out;
  const ExactMatrix id = ExactMatrix::identity(rep.bform.dim());
  for (const Relator& r : p.relators) {
    std::ostringstream params;
    params << relator_to_string(r) << " origin=" << to_string(r.origin);
    out.push_back(make_matrix_report(
        "relator", params.str(), matpow(evaluate(rep, r.base), r.exponent),
        id));
  }
  return out;
}

// Each exponent must be exactly the order of its base element.
inline std::vector<IdentityReport> minimality_check(const Representation& rep,
                                                    const Presentation& p) {
  std::vector<IdentityReport> out;
  for (const Relator& r : p.relators) {
    std::ostringstream params;
    params << relator_to_string(r) << " origin=" << to_string(r.origin);
    OrderResult ord = element_order(rep, r.base);
    std::ostringstream note;
    if (ord.finite)
      note << "order " << ord.value << ", exponent " << r.exponent;
    else
      note << "infinite order, exponent " << r.exponent;
    out.push_back(make_flag_report("relator-minimal", params.str(),
                                   ord.finite && ord.value == r.exponent,
                                   note.str()));
  }
  return out;
}

// Do g and its global sign flip yield literally the same relator set?
// Compared as canonical sorted lists of (base, exponent).
inline bool sign_flip_equivalent(const SignedCoxeterGraph& g) {
  auto canonical = [](const SignedCoxeterGraph& h) {
    std::vector<std::pair<Word, unsigned long>> keys;
    for (const Relator& r : generate_presentation(h).relators)
      keys.emplace_back(r.base, r.exponent);
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  return canonical(g) == canonical(negate(g));
}

enum class PresentationFormat { text, json, gap };

inline std::string export_presentation(const Presentation& p,
                                       PresentationFormat format) {
  switch (format) {
    case PresentationFormat::text: {
      std::ostringstream os;
      for (std::size_t t = 0; t < p.relators.size(); ++t) {
        if (t) os << ", ";
        os << relator_to_string(p.relators[t]);
      }
      return os.str();
    }
    case PresentationFormat::json: {
      nlohmann::json doc;
      doc["n"] = p.n;
      nlohmann::json rels = nlohmann::json::array();
      for (const Relator& r : p.relators) {
        nlohmann::json jr;
        jr["base"] = r.base;
        jr["exponent"] = r.exponent;
        jr["origin"] = to_string(r.origin);
        rels.push_back(std::move(jr));
      }
      doc["relators"] = std::move(rels);
      return doc.dump(2);
    }
    case PresentationFormat::gap: {
      std::ostringstream os;
      os << "F := FreeGroup(" << p.n << ");;\n";
      os << "rels := [";
      for (std::size_t t = 0; t < p.relators.size(); ++t) {
        const Relator& r = p.relators[t];
        os << (t ? ", " : " ");
        if (r.base.size() > 1) os << "(";
        for (std::size_t u = 0; u < r.base.size(); ++u) {
          if (u) os << "*";
          os << "F." << r.base[u];
        }
        if (r.base.size() > 1) os << ")";
        os << "^" << r.exponent;
      }
      os << " ];;\n";
      os << "G := F / rels;;\n";
      return os.str();
    }
  }
  throw PreconditionError("export_presentation: unknown format");
}

inline Presentation parse_presentation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer() || !doc.contains("relators") ||
      !doc["relators"].is_array())
    throw ParseError(
        "presentation: document needs integer \"n\" and array \"relators\"");
  Presentation p;
  p.n = doc["n"].get<int>();
  for (const auto& jr : doc["relators"]) {
    if (!jr.is_object() || !jr.contains("base") || !jr["base"].is_array() ||
        !jr.contains("exponent") || !jr["exponent"].is_number_unsigned() ||
        !jr.contains("origin") || !jr["origin"].is_string())
      throw ParseError("presentation: malformed relator entry");
    Relator r;
    for (const auto& v : jr["base"]) {
      if (!v.is_number_integer())
        throw ParseError("presentation: base letters must be integers");
      r.base.push_back(v.get<int>());
    }
    r.exponent = jr["exponent"].get<unsigned long>();
    r.origin = relator_origin_from_string(jr["origin"].get<std::string>());
    p.relators.push_back(std::move(r));
  }
  return p;
}

}  // namespace signcox
