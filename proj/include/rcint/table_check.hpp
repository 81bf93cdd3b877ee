// Copyright 2026 The rcint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcint/chain_product.hpp"
#include "rcint/error.hpp"
#include "rcint/scalar.hpp"

namespace rcint {

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

namespace detail {

struct TableIssue {
  ErrorCode code;
  ChainProduct::Code lower = 0;  // offending code (boundary) or lower end of the cover
  ChainProduct::Code upper = 0;
};

/// Checks a dense table over a product of chains: exact length, fixed
/// boundary values and monotonicity along every covering edge. Covering
/// edges generate the product order, so this is the full monotonicity test.
template <Scalar T>
std::vector<TableIssue> check_chain_table(const ChainProduct& lattice, std::span<const T> values,
                                          std::span<const std::pair<ChainProduct::Code, T>> boundary,
                                          std::size_t max_issues) {
  std::vector<TableIssue> issues;
  if (values.size() != lattice.size()) {
    issues.push_back({ErrorCode::WrongLength, values.size(), lattice.size()});
    return issues;
  }
  for (const auto& [code, expected] : boundary) {
    if (values[code] != expected) {
      issues.push_back({ErrorCode::BadBoundary, code, code});
      if (issues.size() >= max_issues) return issues;
    }
  }
  for (ChainProduct::Code c = 0; c < lattice.size(); ++c) {
    for (int i = 0; i < lattice.n(); ++i) {
      if (lattice.digit(c, i) == 0) continue;
      const auto lower = c - lattice.stride(i);
      if (values[lower] > values[c]) {
        issues.push_back({ErrorCode::NotMonotone, lower, c});
        if (issues.size() >= max_issues) return issues;
      }
    }
  }
  return issues;
}

inline void throw_first(const std::vector<ValidationIssue>& issues) {
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message);
}

}  // namespace detail
}  // namespace rcint
