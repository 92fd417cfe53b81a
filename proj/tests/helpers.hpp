#pragma once

// Small shared helpers for the test binaries.  Oracle computations live in
// the individual test files next to the checks that use them.

#include <string>
#include <vector>

#include "signcox/signcox.hpp"

namespace testutil {

inline signcox::ExactMatrix mat(const std::vector<std::vector<long>>& rows) {
  signcox::ExactMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline signcox::SignedCoxeterGraph line(const std::vector<int>& signs) {
  return signcox::build(signcox::GraphShape::line, signs);
}

inline signcox::SignedCoxeterGraph cycle(const std::vector<int>& signs) {
  return signcox::build(signcox::GraphShape::cycle, signs);
}

// All 2^n sign patterns of length n, in binary counting order
// (bit set -> -1).
inline std::vector<std::vector<int>> all_sign_patterns(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i)
      if (bits & (1ul << i)) signs[static_cast<std::size_t>(i)] = -1;
    out.push_back(std::move(signs));
  }
  return out;
}

inline std::string graphs_dir() {
  return std::string(SIGNCOX_SOURCE_DIR) + "/graphs";
}

}  // namespace testutil
