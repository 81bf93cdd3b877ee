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

// Interval-valued score vectors: one closed interval [lo, hi] per criterion.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "rcint/lattice.hpp"
#include "rcint/scalar.hpp"

namespace rcint {

template <Scalar T>
struct Interval {
  T lo;
  T hi;

  /// Throws InvalidInterval if lo > hi.
  static Interval make(T lo, T hi) {
    if (lo > hi) {
      throw Error(ErrorCode::InvalidInterval,
                  "[" + format_scalar(lo) + "," + format_scalar(hi) + "] has lo > hi");
    }
    return Interval{std::move(lo), std::move(hi)};
  }
  /// [x,x], identified with the real x.
  static Interval point(const T& x) { return Interval{x, x}; }

  [[nodiscard]] bool is_degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

template <Scalar T>
class IntervalVector {
 public:
  IntervalVector() = default;
  explicit IntervalVector(std::vector<Interval<T>> items) : items_(std::move(items)) {
    for (const auto& it : items_) Interval<T>::make(it.lo, it.hi);
  }
  IntervalVector(std::initializer_list<Interval<T>> items)
      : IntervalVector(std::vector<Interval<T>>(items)) {}

  /// Degenerate vector ([x_1,x_1], ..., [x_n,x_n]).
  static IntervalVector from_points(std::span<const T> xs) {
    std::vector<Interval<T>> items;
    items.reserve(xs.size());
    for (const auto& x : xs) items.push_back(Interval<T>::point(x));
    return IntervalVector(std::move(items));
  }
  static IntervalVector constant(int n, const T& k) {
    return IntervalVector(std::vector<Interval<T>>(static_cast<std::size_t>(n), Interval<T>::point(k)));
  }
  /// Pairs each lower endpoint with the matching upper endpoint.
  static IntervalVector from_bounds(std::span<const T> lower, std::span<const T> upper) {
    if (lower.size() != upper.size()) throw Error(ErrorCode::LengthMismatch, "bound vectors differ in length");
    std::vector<Interval<T>> items;
    for (std::size_t i = 0; i < lower.size(); ++i) items.push_back(Interval<T>::make(lower[i], upper[i]));
    return IntervalVector(std::move(items));
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(items_.size()); }
  [[nodiscard]] const Interval<T>& operator[](int i) const { return items_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::span<const Interval<T>> items() const noexcept { return items_; }

  /// Pessimistic evaluations x̲.
  [[nodiscard]] std::vector<T> lower() const {
    std::vector<T> out;
    for (const auto& it : items_) out.push_back(it.lo);
    return out;
  }
  /// Optimistic evaluations x̄.
  [[nodiscard]] std::vector<T> upper() const {
    std::vector<T> out;
    for (const auto& it : items_) out.push_back(it.hi);
    return out;
  }
  /// (x̲_1, ..., x̲_n, x̄_1, ..., x̄_n).
  [[nodiscard]] std::vector<T> flattened() const {
    auto out = lower();
    for (const auto& it : items_) out.push_back(it.hi);
    return out;
  }
  [[nodiscard]] bool is_degenerate() const {
    return std::all_of(items_.begin(), items_.end(), [](const auto& it) { return it.is_degenerate(); });
  }

  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

 private:
  std::vector<Interval<T>> items_;
};

namespace detail {

template <Scalar T>
void require_same_length(const IntervalVector<T>& x, const IntervalVector<T>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "vectors of length " + std::to_string(x.size()) + " and " +
                                               std::to_string(y.size()));
  }
}

}  // namespace detail

/// Componentwise [x̲+y̲, x̄+ȳ].
template <Scalar T>
IntervalVector<T> iv_add(const IntervalVector<T>& x, const IntervalVector<T>& y) {
  detail::require_same_length(x, y);
  std::vector<Interval<T>> out;
  for (int i = 0; i < x.size(); ++i) out.push_back({x[i].lo + y[i].lo, x[i].hi + y[i].hi});
  return IntervalVector<T>(std::move(out));
}

/// a·x for a >= 0; throws NegativeScale otherwise.
template <Scalar T>
IntervalVector<T> iv_scale(const T& a, const IntervalVector<T>& x) {
  if (a < T(0)) throw Error(ErrorCode::NegativeScale, "interval vectors only scale by a >= 0");
  std::vector<Interval<T>> out;
  for (const auto& it : x.items()) out.push_back({a * it.lo, a * it.hi});
  return IntervalVector<T>(std::move(out));
}

/// x ≤ y iff x̲ ≤ y̲ and x̄ ≤ ȳ componentwise.
template <Scalar T>
bool iv_leq(const IntervalVector<T>& x, const IntervalVector<T>& y) {
  detail::require_same_length(x, y);
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].lo > y[i].lo || x[i].hi > y[i].hi) return false;
  }
  return true;
}

/// Comonotonicity of the flattened 2n-vectors:
/// (x*_i - x*_j)(y*_i - y*_j) >= 0 for all i, j.
template <Scalar T>
bool comonotone(const IntervalVector<T>& x, const IntervalVector<T>& y) {
  detail::require_same_length(x, y);
  const auto xs = x.flattened();
  const auto ys = y.flattened();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if ((xs[i] < xs[j] && ys[i] > ys[j]) || (xs[i] > xs[j] && ys[i] < ys[j])) return false;
    }
  }
  return true;
}

/// 1_(A,B): [1,1] on A, [0,1] on B∖A, [0,0] elsewhere.
template <Scalar T>
IntervalVector<T> indicator(const QPair& p) {
  std::vector<Interval<T>> out;
  for (int i = 0; i < p.n(); ++i) {
    if (p.sure().contains(i)) {
      out.push_back({T(1), T(1)});
    } else if (p.possible().contains(i)) {
      out.push_back({T(0), T(1)});
    } else {
      out.push_back({T(0), T(0)});
    }
  }
  return IntervalVector<T>(std::move(out));
}

/// (A_t, B_t) = ({i : x̲_i >= t}, {i : x̄_i >= t}).
template <Scalar T>
struct ThresholdCut {
  T t;
  CriterionSet::Bits sure = 0;
  CriterionSet::Bits possible = 0;
};

template <Scalar T>
ThresholdCut<T> threshold_cut(const IntervalVector<T>& x, const T& t) {
  ThresholdCut<T> cut{t};
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].lo >= t) cut.sure |= CriterionSet::Bits{1} << i;
    if (x[i].hi >= t) cut.possible |= CriterionSet::Bits{1} << i;
  }
  return cut;
}

}  // namespace rcint
