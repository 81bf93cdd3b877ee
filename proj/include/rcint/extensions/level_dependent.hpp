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

// Level-dependent interval capacities, represented piecewise constant in
// the level t, and the generalized robust Choquet integral over them.

#include <algorithm>
#include <optional>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/interval.hpp"

namespace rcint {

template <Scalar T>
struct LevelPiece {
  std::optional<T> upper;  // right end t_j of (t_{j-1}, t_j]; nullopt = +∞
  IntervalCapacity<T> capacity;
};

/// μ^G(·, t) = pieces[j].capacity for t in (t_{j-1}, t_j], with t_0 = lower
/// (nullopt = -∞). Breakpoints must increase strictly and only the last
/// piece may be unbounded above.
template <Scalar T>
class LevelDependentCapacity {
 public:
  LevelDependentCapacity(std::optional<T> lower, std::vector<LevelPiece<T>> pieces)
      : lower_(std::move(lower)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(ErrorCode::InvalidArgument, "level-dependent capacity needs a piece");
    const auto& first = pieces_.front().capacity;
    std::optional<T> prev = lower_;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      const auto& piece = pieces_[j];
      if (piece.capacity.n() != first.n() || piece.capacity.top() != first.top()) {
        throw Error(ErrorCode::SizeMismatch, "pieces disagree on n or scale");
      }
      if (!piece.upper && j + 1 != pieces_.size()) {
        throw Error(ErrorCode::InvalidArgument, "only the last piece may extend to +inf");
      }
      if (piece.upper && prev && !(*prev < *piece.upper)) {
        throw Error(ErrorCode::InvalidArgument, "breakpoints must increase strictly");
      }
      prev = piece.upper;
    }
  }

  /// The same capacity at every level.
  static LevelDependentCapacity constant(IntervalCapacity<T> mu) {
    std::vector<LevelPiece<T>> pieces;
    pieces.push_back({std::nullopt, std::move(mu)});
    return LevelDependentCapacity(std::nullopt, std::move(pieces));
  }

  [[nodiscard]] int n() const noexcept { return pieces_.front().capacity.n(); }
  [[nodiscard]] const T& top() const noexcept { return pieces_.front().capacity.top(); }
  [[nodiscard]] const std::optional<T>& lower() const noexcept { return lower_; }
  [[nodiscard]] std::optional<T> upper() const { return pieces_.back().upper; }
  [[nodiscard]] const std::vector<LevelPiece<T>>& pieces() const noexcept { return pieces_; }

  /// Capacity in force at level t; requires t inside the domain.
  [[nodiscard]] const IntervalCapacity<T>& at_level(const T& t) const {
    if (lower_ && !(t > *lower_)) throw Error(ErrorCode::OutOfDomain, "level below the capacity's domain");
    for (const auto& piece : pieces_) {
      if (!piece.upper || t <= *piece.upper) return piece.capacity;
    }
    throw Error(ErrorCode::OutOfDomain, "level above the capacity's domain");
  }

 private:
  std::optional<T> lower_;
  std::vector<LevelPiece<T>> pieces_;
};

/// ∫_{min x̲}^{max x̄} μ^G(A_t, B_t; t)/M dt + min x̲, summed over the
/// segments between vector endpoints and capacity breakpoints. Beyond
/// max x̄ the cut is (∅,∅) where every piece is 0, so truncation is exact.
/// Throws OutOfDomain if an endpoint lies outside [lower, upper].
template <Scalar T>
T rci_level_dependent(const IntervalVector<T>& x, const LevelDependentCapacity<T>& mu) {
  if (x.size() != mu.n()) throw Error(ErrorCode::LengthMismatch, "vector length does not match capacity");
  const auto lo = x.lower();
  const auto hi = x.upper();
  const T start = *std::min_element(lo.begin(), lo.end());
  const T stop = *std::max_element(hi.begin(), hi.end());
  if (mu.lower() && start < *mu.lower()) {
    throw Error(ErrorCode::OutOfDomain, "evaluation " + format_scalar(start) + " below the level domain");
  }
  if (const auto up = mu.upper(); up && stop > *up) {
    throw Error(ErrorCode::OutOfDomain, "evaluation " + format_scalar(stop) + " above the level domain");
  }
  auto pts = x.flattened();
  for (const auto& piece : mu.pieces()) {
    if (piece.upper && *piece.upper > start && *piece.upper < stop) pts.push_back(*piece.upper);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  T integral(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const auto cut = threshold_cut(x, pts[k]);
    integral += (pts[k] - pts[k - 1]) * mu.at_level(pts[k]).at_bits(cut.sure, cut.possible);
  }
  return integral / mu.top() + start;
}

}  // namespace rcint
