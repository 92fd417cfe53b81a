#pragma once

// Uniform result record for every verification routine in the library.

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "signcox/exact.hpp"

namespace signcox {

struct IdentityReport {
  std::string identity_name;
  std::string parameters;
  bool holds = false;
  // For matrix identities: LHS - RHS, kept whether or not it is zero, so that
  // `holds == witness->is_zero()` always.  Absent for non-matrix checks.
  std::optional<ExactMatrix> witness;
  std::string note;  // extra context: vacuous passes, hypothesis violations
};

inline IdentityReport make_matrix_report(std::string name, std::string params,
                                         const ExactMatrix& lhs,
                                         const ExactMatrix& rhs,
                                         std::string note = {}) {
  ExactMatrix diff = lhs - rhs;
  IdentityReport r;
  r.identity_name = std::move(name);
  r.parameters = std::move(params);
  r.holds = diff.is_zero();
  r.witness = std::move(diff);
  r.note = std::move(note);
  return r;
}

inline IdentityReport make_flag_report(std::string name, std::string params,
                                       bool holds, std::string note = {}) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.parameters = std::move(params);
  r.holds = holds;
  r.note = std::move(note);
  return r;
}

inline std::string format_report_line(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.holds ? "PASS " : "FAIL ") << r.identity_name;
  if (!r.parameters.empty()) os << " [" << r.parameters << "]";
  if (!r.note.empty()) os << " -- " << r.note;
  return os.str();
}

}  // namespace signcox
