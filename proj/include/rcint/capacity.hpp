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

// Classical capacities on 2^N and interval capacities on Q, plus the
// separable construction μ(A,B) = α·ν̲(A) + (1-α)·ν̄(B) and its inverse.
//
// Both capacity types carry a scale top M: values live in [0, M] with the
// full coalition worth exactly M. M = 1 is the normalized case; ordinal
// examples use 10- or 30-point scales.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcint/lattice.hpp"
#include "rcint/scalar.hpp"
#include "rcint/table_check.hpp"

namespace rcint {

/// Absolute tolerance for the separability equation in float mode.
inline constexpr double kSeparableTolerance = 1e-9;

namespace detail {

inline std::uint64_t q_code(int n, CriterionSet::Bits sure, CriterionSet::Bits possible) noexcept {
  std::uint64_t code = 0;
  std::uint64_t stride = 1;
  for (int i = 0; i < n; ++i) {
    code += stride * (((sure >> i) & 1U) + ((possible >> i) & 1U));
    stride *= 3;
  }
  return code;
}

template <Scalar T>
void check_top(const T& top) {
  if (!(top > T(0))) throw Error(ErrorCode::InvalidArgument, "scale top must be positive");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Capacity on 2^N, indexed by bitmask.

template <Scalar T>
std::vector<ValidationIssue> validate_capacity(int n, const T& top, std::span<const T> values,
                                               const Labels& labels = {},
                                               std::size_t max_issues = 1) {
  check_criteria_count(n);
  const ChainProduct lattice(n, 2);
  const std::pair<ChainProduct::Code, T> boundary[] = {{0, T(0)}, {lattice.top(), top}};
  std::vector<ValidationIssue> out;
  const Labels names = labels.empty() ? default_labels(n) : labels;
  const auto set_name = [&](std::uint64_t bits) {
    return format_set(CriterionSet::from_bits(n, static_cast<CriterionSet::Bits>(bits)), names);
  };
  for (const auto& issue : detail::check_chain_table<T>(lattice, values, boundary, max_issues)) {
    switch (issue.code) {
      case ErrorCode::WrongLength:
        out.push_back({issue.code, "capacity table has " + std::to_string(issue.lower) +
                                       " entries, expected 2^n = " + std::to_string(issue.upper)});
        break;
      case ErrorCode::BadBoundary:
        out.push_back({issue.code, "capacity of " + set_name(issue.lower) + " must be " +
                                       (issue.lower == 0 ? std::string("0") : format_scalar(top))});
        break;
      default:
        out.push_back({issue.code, "capacity decreases from " + set_name(issue.lower) + " (" +
                                       format_scalar(values[issue.lower]) + ") to " +
                                       set_name(issue.upper) + " (" +
                                       format_scalar(values[issue.upper]) + ")"});
    }
  }
  return out;
}

template <Scalar T>
class Capacity {
 public:
  /// Validates boundary values and monotonicity; throws on the first issue.
  Capacity(int n, T top, std::vector<T> values) : n_(n), top_(std::move(top)), values_(std::move(values)) {
    detail::check_top(top_);
    detail::throw_first(validate_capacity<T>(n_, top_, values_));
  }

  /// The additive capacity ν(A) = Σ_{i∈A} w_i. Weights must be nonnegative;
  /// they are rescaled so that ν(N) = top.
  static Capacity additive(std::span<const T> weights, T top = T(1)) {
    const int n = static_cast<int>(weights.size());
    check_criteria_count(n);
    T total(0);
    for (const auto& w : weights) {
      if (w < T(0)) throw Error(ErrorCode::InvalidArgument, "additive weights must be nonnegative");
      total += w;
    }
    if (!(total > T(0))) throw Error(ErrorCode::InvalidArgument, "additive weights sum to zero");
    std::vector<T> values(std::size_t{1} << n, T(0));
    for (std::size_t bits = 1; bits < values.size(); ++bits) {
      T sum(0);
      for (int i = 0; i < n; ++i) {
        if ((bits >> i) & 1U) sum += weights[static_cast<std::size_t>(i)];
      }
      values[bits] = std::min<T>(sum / total * top, top);
    }
    values.back() = top;
    return Capacity(n, top, std::move(values));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const T& top() const noexcept { return top_; }
  [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
  [[nodiscard]] const T& operator()(const CriterionSet& s) const { return values_[s.bits()]; }
  [[nodiscard]] const T& at_bits(CriterionSet::Bits bits) const { return values_[bits]; }

 private:
  int n_;
  T top_;
  std::vector<T> values_;
};

// ---------------------------------------------------------------------------
// Interval capacity on Q, indexed by QIndex.

template <Scalar T>
std::vector<ValidationIssue> validate_interval_capacity(int n, const T& top, std::span<const T> values,
                                                        const Labels& labels = {},
                                                        std::size_t max_issues = 1) {
  check_criteria_count(n);
  const ChainProduct lattice = q_lattice(n);
  const std::pair<ChainProduct::Code, T> boundary[] = {{0, T(0)}, {lattice.top(), top}};
  std::vector<ValidationIssue> out;
  const Labels names = labels.empty() ? default_labels(n) : labels;
  const auto pair_name = [&](std::uint64_t code) {
    return format_qpair(q_from_index(QIndex{static_cast<std::uint32_t>(code)}, n), names);
  };
  for (const auto& issue : detail::check_chain_table<T>(lattice, values, boundary, max_issues)) {
    switch (issue.code) {
      case ErrorCode::WrongLength:
        out.push_back({issue.code, "interval capacity table has " + std::to_string(issue.lower) +
                                       " entries, expected 3^n = " + std::to_string(issue.upper)});
        break;
      case ErrorCode::BadBoundary:
        out.push_back({issue.code, "value at " + pair_name(issue.lower) + " is " +
                                       format_scalar(values[issue.lower]) + ", must be " +
                                       (issue.lower == 0 ? std::string("0") : format_scalar(top))});
        break;
      default:
        out.push_back({issue.code, "value decreases from " + pair_name(issue.lower) + " (" +
                                       format_scalar(values[issue.lower]) + ") to " +
                                       pair_name(issue.upper) + " (" +
                                       format_scalar(values[issue.upper]) + ")"});
    }
  }
  return out;
}

template <Scalar T>
class IntervalCapacity {
 public:
  /// Validates boundary values and monotonicity; throws on the first issue.
  IntervalCapacity(int n, T top, std::vector<T> values)
      : n_(n), top_(std::move(top)), values_(std::move(values)) {
    detail::check_top(top_);
    detail::throw_first(validate_interval_capacity<T>(n_, top_, values_));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const T& top() const noexcept { return top_; }
  [[nodiscard]] std::span<const T> values() const noexcept { return values_; }

  [[nodiscard]] const T& operator[](QIndex index) const { return values_.at(index.code); }
  [[nodiscard]] const T& operator()(const QPair& p) const { return values_[q_index(p).code]; }
  /// Lookup by raw bitmasks; `sure` must be a subset of `possible`.
  [[nodiscard]] const T& at_bits(CriterionSet::Bits sure, CriterionSet::Bits possible) const {
    return values_[detail::q_code(n_, sure, possible)];
  }

 private:
  int n_;
  T top_;
  std::vector<T> values_;
};

/// ν(A) = μ(A,A).
template <Scalar T>
Capacity<T> diagonal_capacity(const IntervalCapacity<T>& mu) {
  std::vector<T> values(std::size_t{1} << mu.n());
  for (std::size_t bits = 0; bits < values.size(); ++bits) {
    const auto b = static_cast<CriterionSet::Bits>(bits);
    values[bits] = mu.at_bits(b, b);
  }
  return Capacity<T>(mu.n(), mu.top(), std::move(values));
}

/// The pessimistic and optimistic capacities elicited from μ:
///   ν̲(A) = M·(μ(A,N) - μ(∅,N)) / (M - μ(∅,N)),  ν̄(A) = M·μ(∅,A) / μ(∅,N).
/// Throws DegenerateAnchor when μ(∅,N) is 0 or M.
template <Scalar T>
std::pair<Capacity<T>, Capacity<T>> lower_upper_derived(const IntervalCapacity<T>& mu) {
  const int n = mu.n();
  const auto full = static_cast<CriterionSet::Bits>((std::size_t{1} << n) - 1);
  const T& anchor = mu.at_bits(0, full);
  const T& top = mu.top();
  if (anchor == T(0) || anchor == top) {
    throw Error(ErrorCode::DegenerateAnchor, "mu(∅,N) = " + format_scalar(anchor) +
                                                 " leaves the derived capacities undefined");
  }
  std::vector<T> lower(std::size_t{1} << n);
  std::vector<T> upper(lower.size());
  for (std::size_t bits = 0; bits < lower.size(); ++bits) {
    const auto s = static_cast<CriterionSet::Bits>(bits);
    lower[bits] = std::clamp<T>((mu.at_bits(s, full) - anchor) / (top - anchor) * top, T(0), top);
    upper[bits] = std::clamp<T>(mu.at_bits(0, s) / anchor * top, T(0), top);
  }
  lower.front() = T(0);
  lower.back() = top;
  upper.front() = T(0);
  upper.back() = top;
  return {Capacity<T>(n, top, std::move(lower)), Capacity<T>(n, top, std::move(upper))};
}

// ---------------------------------------------------------------------------
// Separable interval capacities.

template <Scalar T>
struct SeparableDecomposition {
  T alpha;
  Capacity<T> lower;  // ν̲, weighs the sure coalition
  Capacity<T> upper;  // ν̄, weighs the possible coalition

  SeparableDecomposition(T a, Capacity<T> lo, Capacity<T> hi)
      : alpha(std::move(a)), lower(std::move(lo)), upper(std::move(hi)) {
    if (alpha < T(0) || alpha > T(1)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0,1]");
    if (lower.n() != upper.n()) throw Error(ErrorCode::SizeMismatch, "capacities over different N");
    if (lower.top() != upper.top()) throw Error(ErrorCode::InvalidArgument, "capacities with different scale");
  }
};

/// μ(A,B) = α·ν̲(A) + (1-α)·ν̄(B) for every (A,B) in Q.
template <Scalar T>
IntervalCapacity<T> separable_from(const SeparableDecomposition<T>& dec) {
  const int n = dec.lower.n();
  const T& top = dec.lower.top();
  const T beta = T(1) - dec.alpha;
  const ChainProduct lattice = q_lattice(n);
  std::vector<T> values(lattice.size());
  for (std::uint32_t code = 0; code < lattice.size(); ++code) {
    const QPair p = q_from_index(QIndex{code}, n);
    // Clamping is monotone, so it only absorbs float rounding at the ends.
    values[code] = std::clamp<T>(dec.alpha * dec.lower(p.sure()) + beta * dec.upper(p.possible()), T(0), top);
  }
  values.front() = T(0);
  values.back() = top;
  return IntervalCapacity<T>(n, top, std::move(values));
}

/// Whether μ(A,B) - μ(A',B) = μ(A,B') - μ(A',B') for the given sets
/// (requires A ∪ A' ⊆ B ∩ B').
template <Scalar T>
bool separable_equation_holds(const IntervalCapacity<T>& mu, CriterionSet::Bits a, CriterionSet::Bits a2,
                              CriterionSet::Bits b, CriterionSet::Bits b2,
                              double tol = kSeparableTolerance) {
  const T lhs = mu.at_bits(a, b) - mu.at_bits(a2, b);
  const T rhs = mu.at_bits(a, b2) - mu.at_bits(a2, b2);
  return nearly_equal(lhs, rhs, tol);
}

/// Checks the separability equation on every admissible quadruple
/// (7^n of them).
template <Scalar T>
bool is_separable_exhaustive(const IntervalCapacity<T>& mu, double tol = kSeparableTolerance) {
  const int n = mu.n();
  const CriterionSet::Bits subsets = CriterionSet::Bits{1} << n;
  for (CriterionSet::Bits b = 0; b < subsets; ++b) {
    for (CriterionSet::Bits b2 = 0; b2 < subsets; ++b2) {
      const CriterionSet::Bits common = b & b2;
      // A and A' range over subsets of B ∩ B'.
      for (CriterionSet::Bits a = common;; a = (a - 1) & common) {
        for (CriterionSet::Bits a2 = common;; a2 = (a2 - 1) & common) {
          if (!separable_equation_holds(mu, a, a2, b, b2, tol)) return false;
          if (a2 == 0) break;
        }
        if (a == 0) break;
      }
    }
  }
  return true;
}

/// The instance A' = ∅, B' = N of the separability equation, i.e.
/// μ(A,B) = μ(A,N) - μ(∅,N) + μ(∅,B) on all of Q. This alone already forces
/// the separable form, so it is equivalent to the exhaustive check.
template <Scalar T>
bool is_separable_reduced(const IntervalCapacity<T>& mu, double tol = kSeparableTolerance) {
  const int n = mu.n();
  const auto full = static_cast<CriterionSet::Bits>((std::size_t{1} << n) - 1);
  for (std::uint32_t code = 0; code < pow3(n); ++code) {
    const QPair p = q_from_index(QIndex{code}, n);
    if (!separable_equation_holds(mu, p.sure().bits(), 0, p.possible().bits(), full, tol)) return false;
  }
  return true;
}

/// Exhaustive for n <= 8, reduced form beyond.
template <Scalar T>
bool is_separable(const IntervalCapacity<T>& mu, double tol = kSeparableTolerance) {
  return mu.n() <= 8 ? is_separable_exhaustive(mu, tol) : is_separable_reduced(mu, tol);
}

/// Recovers (α, ν̲, ν̄) with α = 1 - μ(∅,N)/M. When μ(∅,N) = 0 the optimistic
/// capacity has zero weight and is set equal to ν̲; symmetrically for
/// μ(∅,N) = M. Throws NotSeparable.
template <Scalar T>
SeparableDecomposition<T> decompose_separable(const IntervalCapacity<T>& mu, double tol = kSeparableTolerance) {
  if (!is_separable(mu, tol)) throw Error(ErrorCode::NotSeparable, "interval capacity is not separable");
  const int n = mu.n();
  const T& top = mu.top();
  const auto full = static_cast<CriterionSet::Bits>((std::size_t{1} << n) - 1);
  const T& anchor = mu.at_bits(0, full);
  const auto table_of = [&](auto&& value_of) {
    std::vector<T> values(std::size_t{1} << n);
    for (std::size_t bits = 0; bits < values.size(); ++bits) {
      values[bits] = std::clamp<T>(value_of(static_cast<CriterionSet::Bits>(bits)), T(0), top);
    }
    values.front() = T(0);
    values.back() = top;
    return Capacity<T>(n, top, std::move(values));
  };
  if (anchor == T(0)) {
    auto lower = table_of([&](CriterionSet::Bits a) { return mu.at_bits(a, full); });
    return {T(1), lower, lower};
  }
  if (anchor == top) {
    auto upper = table_of([&](CriterionSet::Bits b) { return mu.at_bits(0, b); });
    return {T(0), upper, upper};
  }
  auto [lower, upper] = lower_upper_derived(mu);
  return {T(1) - anchor / top, std::move(lower), std::move(upper)};
}

}  // namespace rcint
