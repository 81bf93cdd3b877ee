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

// Bipolar interval capacities and the bipolar robust Choquet integral.
//
// An element of Q_b is (A+, B+, A-, B-) with A+ ⊆ B+, B- ⊆ A- and
// B+ ∩ A- = ∅: A+ surely positive, B+ possibly positive, A- possibly
// negative, B- surely negative. Per criterion that leaves five states that
// form a chain under the bipolar order (positive sets grow, negative sets
// shrink), so Q_b is indexed densely in base 5:
//
//   0 = surely negative, 1 = possibly negative, 2 = neutral,
//   3 = possibly positive, 4 = surely positive.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/interval.hpp"

namespace rcint {

inline constexpr int kMaxBipolarCriteria = 10;

class BipolarQuad {
 public:
  /// Throws NotNested when the containments or the disjointness fail.
  static BipolarQuad make(CriterionSet a_pos, CriterionSet b_pos, CriterionSet a_neg, CriterionSet b_neg) {
    const int n = a_pos.n();
    if (b_pos.n() != n || a_neg.n() != n || b_neg.n() != n) {
      throw Error(ErrorCode::SizeMismatch, "quadruple components over different N");
    }
    if (!a_pos.is_subset_of(b_pos)) throw Error(ErrorCode::NotNested, "A+ is not contained in B+");
    if (!b_neg.is_subset_of(a_neg)) throw Error(ErrorCode::NotNested, "B- is not contained in A-");
    if (!(b_pos & a_neg).is_empty()) throw Error(ErrorCode::NotNested, "B+ and A- overlap");
    return BipolarQuad(a_pos, b_pos, a_neg, b_neg);
  }

  [[nodiscard]] int n() const noexcept { return a_pos_.n(); }
  [[nodiscard]] const CriterionSet& a_pos() const noexcept { return a_pos_; }
  [[nodiscard]] const CriterionSet& b_pos() const noexcept { return b_pos_; }
  [[nodiscard]] const CriterionSet& a_neg() const noexcept { return a_neg_; }
  [[nodiscard]] const CriterionSet& b_neg() const noexcept { return b_neg_; }

  [[nodiscard]] std::uint64_t code() const noexcept {
    std::uint64_t code = 0;
    std::uint64_t stride = 1;
    for (int i = 0; i < n(); ++i) {
      int digit = 2;
      if (a_pos_.contains(i)) {
        digit = 4;
      } else if (b_pos_.contains(i)) {
        digit = 3;
      } else if (b_neg_.contains(i)) {
        digit = 0;
      } else if (a_neg_.contains(i)) {
        digit = 1;
      }
      code += stride * static_cast<std::uint64_t>(digit);
      stride *= 5;
    }
    return code;
  }

  static BipolarQuad from_code(std::uint64_t code, int n) {
    CriterionSet::Bits bits[4] = {0, 0, 0, 0};  // A+, B+, A-, B-
    for (int i = 0; i < n; ++i) {
      const auto digit = code % 5;
      code /= 5;
      const CriterionSet::Bits bit = CriterionSet::Bits{1} << i;
      if (digit >= 3) bits[1] |= bit;
      if (digit == 4) bits[0] |= bit;
      if (digit <= 1) bits[2] |= bit;
      if (digit == 0) bits[3] |= bit;
    }
    return make(CriterionSet::from_bits(n, bits[0]), CriterionSet::from_bits(n, bits[1]),
                CriterionSet::from_bits(n, bits[2]), CriterionSet::from_bits(n, bits[3]));
  }

  /// Swaps the roles of the two poles: (A+,B+,A-,B-) -> (B-,A-,B+,A+).
  [[nodiscard]] BipolarQuad mirrored() const { return BipolarQuad(b_neg_, a_neg_, b_pos_, a_pos_); }

  friend bool operator==(const BipolarQuad&, const BipolarQuad&) = default;

 private:
  BipolarQuad(CriterionSet ap, CriterionSet bp, CriterionSet an, CriterionSet bn)
      : a_pos_(ap), b_pos_(bp), a_neg_(an), b_neg_(bn) {}
  CriterionSet a_pos_, b_pos_, a_neg_, b_neg_;
};

[[nodiscard]] inline ChainProduct bipolar_lattice(int n) {
  check_criteria_count(n);
  if (n > kMaxBipolarCriteria) {
    throw Error(ErrorCode::TooManyCriteria, "bipolar capacities support at most " +
                                                std::to_string(kMaxBipolarCriteria) + " criteria");
  }
  return ChainProduct(n, 5);
}

/// "A+={..};B+={..};A-={..};B-={..}".
inline std::string format_quad(const BipolarQuad& q, const Labels& labels) {
  return "A+=" + format_set(q.a_pos(), labels) + ";B+=" + format_set(q.b_pos(), labels) +
         ";A-=" + format_set(q.a_neg(), labels) + ";B-=" + format_set(q.b_neg(), labels);
}

template <Scalar T>
std::vector<ValidationIssue> validate_bipolar_capacity(int n, const T& top, std::span<const T> values,
                                                       const Labels& labels = {},
                                                       std::size_t max_issues = 1) {
  const ChainProduct lattice = bipolar_lattice(n);
  const std::pair<ChainProduct::Code, T> boundary[] = {
      {lattice.uniform(2), T(0)}, {lattice.uniform(4), top}, {lattice.uniform(0), T(-top)}};
  const Labels names = labels.empty() ? default_labels(n) : labels;
  const auto name = [&](std::uint64_t code) { return format_quad(BipolarQuad::from_code(code, n), names); };
  std::vector<ValidationIssue> out;
  for (const auto& issue : detail::check_chain_table<T>(lattice, values, boundary, max_issues)) {
    switch (issue.code) {
      case ErrorCode::WrongLength:
        out.push_back({issue.code, "bipolar capacity table has " + std::to_string(issue.lower) +
                                       " entries, expected 5^n = " + std::to_string(issue.upper)});
        break;
      case ErrorCode::BadBoundary:
        out.push_back({issue.code, "boundary value wrong at " + name(issue.lower)});
        break;
      default:
        out.push_back({issue.code, "value decreases from " + name(issue.lower) + " to " + name(issue.upper)});
    }
  }
  return out;
}

/// μ: Q_b -> [-M, M] with μ(∅,∅,∅,∅) = 0, μ(N,N,∅,∅) = M, μ(∅,∅,N,N) = -M,
/// monotone in the bipolar order.
template <Scalar T>
class BipolarIntervalCapacity {
 public:
  BipolarIntervalCapacity(int n, T top, std::vector<T> values)
      : n_(n), top_(std::move(top)), values_(std::move(values)) {
    detail::check_top(top_);
    detail::throw_first(validate_bipolar_capacity<T>(n_, top_, values_));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const T& top() const noexcept { return top_; }
  [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
  [[nodiscard]] const T& operator()(const BipolarQuad& q) const { return values_[q.code()]; }
  [[nodiscard]] const T& at_code(std::uint64_t code) const { return values_[code]; }

 private:
  int n_;
  T top_;
  std::vector<T> values_;
};

/// μ(A+,B+,A-,B-) = μ_pos(A+,B+) - μ_neg(B-,A-). With μ_pos = μ_neg the
/// result is symmetric: μ(mirror q) = -μ(q).
template <Scalar T>
BipolarIntervalCapacity<T> bipolar_from_poles(const IntervalCapacity<T>& positive,
                                              const IntervalCapacity<T>& negative) {
  if (positive.n() != negative.n()) throw Error(ErrorCode::SizeMismatch, "poles over different N");
  if (positive.top() != negative.top()) throw Error(ErrorCode::InvalidArgument, "poles with different scale");
  const int n = positive.n();
  const ChainProduct lattice = bipolar_lattice(n);
  std::vector<T> values(lattice.size());
  for (ChainProduct::Code code = 0; code < lattice.size(); ++code) {
    const auto q = BipolarQuad::from_code(code, n);
    values[code] = positive.at_bits(q.a_pos().bits(), q.b_pos().bits()) -
                   negative.at_bits(q.b_neg().bits(), q.a_neg().bits());
  }
  return BipolarIntervalCapacity<T>(n, positive.top(), std::move(values));
}

/// ∫_0^∞ μ(A_t, B_t, C_t, D_t)/M dt with A_t = {x̲ >= t}, B_t = {x̄ >= t},
/// C_t = {x̲ <= -t}, D_t = {x̄ <= -t}. The integrand is a step function of t
/// with breakpoints at the endpoint magnitudes and is summed exactly.
/// Intervals with x̲ < 0 < x̄ fall in both poles at once, which Q_b excludes;
/// they raise OutOfDomain.
template <Scalar T>
T bipolar_rci(const IntervalVector<T>& x, const BipolarIntervalCapacity<T>& mu) {
  if (x.size() != mu.n()) throw Error(ErrorCode::LengthMismatch, "vector length does not match capacity");
  std::vector<T> pts{T(0)};
  for (int i = 0; i < x.size(); ++i) {
    const auto& it = x[i];
    if (it.lo < T(0) && it.hi > T(0)) {
      throw Error(ErrorCode::OutOfDomain, "interval " + std::to_string(i + 1) +
                                              " straddles zero; bipolar cuts would overlap");
    }
    for (const T& v : {it.lo, it.hi}) pts.push_back(v < T(0) ? T(-v) : v);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  T result(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const T& t = pts[k];
    std::uint64_t code = 0;
    std::uint64_t stride = 1;
    for (int i = 0; i < x.size(); ++i) {
      int digit = 2;
      if (x[i].lo >= t) {
        digit = 4;
      } else if (x[i].hi >= t) {
        digit = 3;
      } else if (x[i].hi <= -t) {
        digit = 0;
      } else if (x[i].lo <= -t) {
        digit = 1;
      }
      code += stride * static_cast<std::uint64_t>(digit);
      stride *= 5;
    }
    result += (t - pts[k - 1]) * mu.at_code(code);
  }
  return result / mu.top();
}

}  // namespace rcint
