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

// m-point evaluations (f_1(x_i) <= ... <= f_m(x_i)) and the capacities over
// chains A_1 ⊆ ... ⊆ A_m that aggregate them. A chain is stored as a base
// m+1 code whose digit i counts the chain sets containing criterion i, so
// A_j = {i : digit_i >= m + 1 - j}. For m = 2 the codes coincide with the
// QIndex codes of Q.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/chain_product.hpp"
#include "rcint/table_check.hpp"

namespace rcint {

template <Scalar T>
class MPointVector {
 public:
  /// points[i] holds the m evaluations of criterion i. Throws
  /// NotChainOrdered if some row decreases, WrongLength on ragged rows.
  explicit MPointVector(std::vector<std::vector<T>> points) : points_(std::move(points)) {
    if (points_.empty() || points_.front().empty()) {
      throw Error(ErrorCode::InvalidArgument, "m-point vector needs at least one criterion and one point");
    }
    const std::size_t m = points_.front().size();
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != m) throw Error(ErrorCode::WrongLength, "criteria carry different numbers of points");
      if (!std::is_sorted(points_[i].begin(), points_[i].end())) {
        throw Error(ErrorCode::NotChainOrdered, "points of criterion " + std::to_string(i + 1) + " decrease");
      }
    }
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(points_.size()); }
  [[nodiscard]] int m() const noexcept { return static_cast<int>(points_.front().size()); }
  [[nodiscard]] const std::vector<T>& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<std::vector<T>> points_;
};

/// Code of the chain (A_1, ..., A_m). Throws NotNested unless the sets grow.
inline std::uint64_t mpoint_code(const std::vector<CriterionSet>& chain) {
  if (chain.empty()) throw Error(ErrorCode::InvalidArgument, "empty chain");
  const int n = chain.front().n();
  const int m = static_cast<int>(chain.size());
  for (std::size_t j = 1; j < chain.size(); ++j) {
    if (chain[j].n() != n) throw Error(ErrorCode::SizeMismatch, "chain sets over different N");
    if (!chain[j - 1].is_subset_of(chain[j])) throw Error(ErrorCode::NotNested, "chain sets are not nested");
  }
  const ChainProduct lattice(n, m + 1);
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& s : chain) count += s.contains(i) ? 1 : 0;
    code += lattice.stride(i) * static_cast<std::uint64_t>(count);
  }
  return code;
}

/// The chain (A_1, ..., A_m) behind a code.
inline std::vector<CriterionSet> mpoint_chain(std::uint64_t code, int n, int m) {
  const ChainProduct lattice(n, m + 1);
  std::vector<CriterionSet> out;
  for (int j = 1; j <= m; ++j) {
    CriterionSet::Bits bits = 0;
    for (int i = 0; i < n; ++i) {
      if (lattice.digit(code, i) >= m + 1 - j) bits |= CriterionSet::Bits{1} << i;
    }
    out.push_back(CriterionSet::from_bits(n, bits));
  }
  return out;
}

/// Dense table over Q_m, (m+1)^n entries, validated on construction:
/// μ(∅,...,∅) = 0, μ(N,...,N) = M, values in [0,M], monotone in the chain order.
template <Scalar T>
class MPointCapacity {
 public:
  MPointCapacity(int n, int m, T top, std::vector<T> values)
      : n_(n), m_(m), top_(std::move(top)), values_(std::move(values)) {
    check_criteria_count(n_);
    if (m_ < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
    detail::check_top(top_);
    const ChainProduct lattice(n_, m_ + 1);
    if (values_.size() != lattice.size()) {
      throw Error(ErrorCode::WrongLength, "m-point capacity needs " + std::to_string(lattice.size()) + " values");
    }
    const std::pair<ChainProduct::Code, T> boundary[] = {{0, T(0)}, {lattice.top(), top_}};
    const auto issues = detail::check_chain_table<T>(lattice, values_, boundary, 1);
    if (issues.empty()) return;
    const auto& issue = issues.front();
    if (issue.code == ErrorCode::BadBoundary) {
      throw Error(issue.code, "boundary value wrong at " + describe(issue.lower));
    }
    throw Error(issue.code, "value decreases from " + describe(issue.lower) + " to " + describe(issue.upper));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] const T& top() const noexcept { return top_; }
  [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
  [[nodiscard]] const T& at_code(std::uint64_t code) const { return values_.at(code); }
  [[nodiscard]] const T& operator()(const std::vector<CriterionSet>& chain) const {
    if (static_cast<int>(chain.size()) != m_) throw Error(ErrorCode::WrongLength, "chain length differs from m");
    return values_.at(mpoint_code(chain));
  }

  [[nodiscard]] std::string describe(std::uint64_t code) const {
    const Labels labels = default_labels(n_);
    std::string out = "(";
    const auto chain = mpoint_chain(code, n_, m_);
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (j > 0) out += ",";
      out += format_set(chain[j], labels);
    }
    return out + ")";
  }

 private:
  int n_;
  int m_;
  T top_;
  std::vector<T> values_;
};

/// ∫_{min f_1}^{max f_m} μ_m({f_1 >= t}, ..., {f_m >= t})/M dt + min f_1, summed
/// exactly over the sorted n·m breakpoints.
template <Scalar T>
T mpoint_rci(const MPointVector<T>& x, const MPointCapacity<T>& mu) {
  if (x.size() != mu.n()) throw Error(ErrorCode::LengthMismatch, "vector length does not match capacity");
  if (x.m() != mu.m()) throw Error(ErrorCode::SizeMismatch, "vector and capacity disagree on m");
  const int n = mu.n();
  const int m = mu.m();
  const ChainProduct lattice(n, m + 1);
  std::vector<T> pts;
  for (int i = 0; i < n; ++i) pts.insert(pts.end(), x[i].begin(), x[i].end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  T integral(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    // Criterion i sits in A_j iff f_j(x_i) >= t; its digit counts those j.
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      const auto& row = x[i];
      const auto count = row.end() - std::lower_bound(row.begin(), row.end(), pts[k]);
      code += lattice.stride(i) * static_cast<std::uint64_t>(count);
    }
    integral += (pts[k] - pts[k - 1]) * mu.at_code(code);
  }
  return integral / mu.top() + pts.front();
}

}  // namespace rcint
