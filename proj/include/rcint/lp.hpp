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

// Equality-form linear programming:
//
//   maximize c·x  subject to  E x = b,  x >= 0
//
// solved by the two-phase simplex method on a dense tableau with Bland's
// smallest-index rule for both the entering and the leaving variable, which
// rules out cycling. With T = Rational every pivot is exact; with T = double
// comparisons use an absolute tolerance.

#include <cstddef>
#include <string>
#include <vector>

#include "rcint/error.hpp"
#include "rcint/scalar.hpp"

namespace rcint {

inline constexpr double kLpTolerance = 1e-9;

template <Scalar T>
struct LinearProgram {
  std::vector<T> objective;                 // c, one entry per variable
  std::vector<std::vector<T>> constraints;  // E, one row per equality
  std::vector<T> rhs;                       // b

  [[nodiscard]] std::size_t variable_count() const noexcept { return objective.size(); }
};

using RationalLP = LinearProgram<Rational>;

template <Scalar T>
struct LpSolution {
  T optimum;
  std::vector<T> x;
};

namespace detail {

template <Scalar T>
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram<T>& lp, double tol)
      : rows_(lp.constraints.size()),
        vars_(lp.variable_count()),
        cols_(vars_ + rows_),
        tol_(tol),
        cells_(rows_ * (cols_ + 1), T(0)),
        basis_(rows_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      const bool flip = lp.rhs[r] < T(0);
      for (std::size_t j = 0; j < vars_; ++j) at(r, j) = flip ? T(-lp.constraints[r][j]) : lp.constraints[r][j];
      at(r, vars_ + r) = T(1);
      rhs(r) = flip ? T(-lp.rhs[r]) : lp.rhs[r];
      basis_[r] = vars_ + r;
    }
  }

  /// Phase 1: drive the artificial variables to zero.
  void find_feasible_basis() {
    std::vector<T> cost(cols_, T(0));
    for (std::size_t j = vars_; j < cols_; ++j) cost[j] = T(-1);
    optimize(cost, cols_);
    T infeasibility(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] >= vars_) infeasibility += rhs(r);
    }
    if (positive(infeasibility)) throw Error(ErrorCode::Infeasible, "constraints admit no nonnegative solution");
    evict_artificials();
  }

  /// Phase 2 over the original variables.
  LpSolution<T> maximize(const std::vector<T>& objective) {
    optimize(objective, vars_);
    LpSolution<T> out{T(0), std::vector<T>(vars_, T(0))};
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < vars_) out.x[basis_[r]] = rhs(r);
    }
    for (std::size_t j = 0; j < vars_; ++j) out.optimum += objective[j] * out.x[j];
    return out;
  }

 private:
  T& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const T& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  T& rhs(std::size_t r) { return at(r, cols_); }

  bool positive(const T& v) const {
    if constexpr (kIsExact<T>) {
      return v > T(0);
    } else {
      return v > tol_;
    }
  }

  void optimize(const std::vector<T>& cost, std::size_t usable_cols) {
    std::vector<bool> is_basic(cols_, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (auto b : basis_) is_basic[b] = true;
      // Bland: lowest-index column with positive reduced cost enters.
      std::size_t entering = usable_cols;
      for (std::size_t j = 0; j < usable_cols && entering == usable_cols; ++j) {
        if (is_basic[j]) continue;
        T reduced = j < cost.size() ? cost[j] : T(0);
        for (std::size_t r = 0; r < rows_; ++r) {
          const std::size_t b = basis_[r];
          const T& cb = b < cost.size() ? cost[b] : T(0);
          if (cb != T(0)) reduced -= cb * at(r, j);
        }
        if (positive(reduced)) entering = j;
      }
      if (entering == usable_cols) return;
      // Minimum ratio; ties go to the lowest-index basic variable.
      std::size_t leaving = rows_;
      T best_ratio(0);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!positive(at(r, entering))) continue;
        const T ratio = rhs(r) / at(r, entering);
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) throw Error(ErrorCode::Unbounded, "objective is unbounded above");
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const T scale = at(row, col);
    for (std::size_t c = 0; c <= cols_; ++c) at(row, c) /= scale;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const T factor = at(r, col);
      if (factor == T(0)) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (at(row, c) != T(0)) at(r, c) -= factor * at(row, c);
      }
      if constexpr (!kIsExact<T>) {
        if (rhs(r) < T(0) && rhs(r) > -tol_) rhs(r) = T(0);
      }
    }
    basis_[row] = col;
  }

  /// Artificials left in the basis sit at zero. Pivot each out on any
  /// original column; a row with no such column is redundant and dropped.
  void evict_artificials() {
    for (std::size_t r = 0; r < rows_;) {
      if (basis_[r] < vars_) {
        ++r;
        continue;
      }
      std::size_t col = vars_;
      for (std::size_t j = 0; j < vars_; ++j) {
        const T& v = at(r, j);
        if (positive(v) || positive(T(-v))) {
          col = j;
          break;
        }
      }
      if (col < vars_) {
        pivot(r, col);
        ++r;
      } else {
        drop_row(r);
      }
    }
  }

  void drop_row(std::size_t row) {
    const std::size_t width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((row + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;
  double tol_;
  std::vector<T> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Throws Infeasible, Unbounded, or SizeMismatch on inconsistent dimensions.
template <Scalar T>
LpSolution<T> lp_maximize(const LinearProgram<T>& lp, double tol = kLpTolerance) {
  if (lp.rhs.size() != lp.constraints.size()) {
    throw Error(ErrorCode::SizeMismatch, "constraint rows and right-hand side differ in count");
  }
  for (const auto& row : lp.constraints) {
    if (row.size() != lp.variable_count()) {
      throw Error(ErrorCode::SizeMismatch, "constraint row has " + std::to_string(row.size()) +
                                               " coefficients for " +
                                               std::to_string(lp.variable_count()) + " variables");
    }
  }
  detail::SimplexTableau<T> tableau(lp, tol);
  tableau.find_feasible_basis();
  return tableau.maximize(lp.objective);
}

}  // namespace rcint
