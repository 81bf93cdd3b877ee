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

// Robust concave integral: the best capacity-weighted decomposition of a
// nonnegative interval vector into generalized indicators,
//
//   max Σ α_(A,B)·μ(A,B)/M  s.t.  Σ α_(A,B)·1_(A,B) = x,  α >= 0,
//
// solved as a linear program over the 3^n - 1 nonempty pairs with one
// equality per endpoint (x̲_i and x̄_i).

#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/interval.hpp"
#include "rcint/lp.hpp"

namespace rcint {

inline constexpr int kMaxConcaveCriteriaExact = 8;
inline constexpr int kMaxConcaveCriteriaFloat = 10;

template <Scalar T>
struct DecompositionTerm {
  QPair pair;
  T weight;
};

/// Nonnegative combination of generalized indicators.
template <Scalar T>
struct Decomposition {
  int n = 0;
  std::vector<DecompositionTerm<T>> terms;
};

template <Scalar T>
struct ConcaveResult {
  T value;
  Decomposition<T> certificate;
};

/// Σ weight·1_(A,B).
template <Scalar T>
IntervalVector<T> recompose(const Decomposition<T>& dec) {
  std::vector<T> lo(static_cast<std::size_t>(dec.n), T(0));
  std::vector<T> hi(lo.size(), T(0));
  for (const auto& term : dec.terms) {
    for (int i = 0; i < dec.n; ++i) {
      if (term.pair.sure().contains(i)) lo[static_cast<std::size_t>(i)] += term.weight;
      if (term.pair.possible().contains(i)) hi[static_cast<std::size_t>(i)] += term.weight;
    }
  }
  return IntervalVector<T>::from_bounds(lo, hi);
}

/// The objective Σ weight·μ(A,B)/M of a decomposition.
template <Scalar T>
T decomposition_value(const Decomposition<T>& dec, const IntervalCapacity<T>& mu) {
  T total(0);
  for (const auto& term : dec.terms) total += term.weight * mu(term.pair);
  return total / mu.top();
}

/// The LP behind the concave integral: variable k stands for the pair with
/// QIndex k + 1; rows 0..n-1 match x̲, rows n..2n-1 match x̄.
template <Scalar T>
LinearProgram<T> concave_program(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  const int n = mu.n();
  const ChainProduct lattice = q_lattice(n);
  LinearProgram<T> lp;
  const std::size_t vars = lattice.size() - 1;
  for (std::size_t k = 1; k < lattice.size(); ++k) lp.objective.push_back(mu.values()[k] / mu.top());
  lp.constraints.assign(2 * static_cast<std::size_t>(n), std::vector<T>(vars, T(0)));
  for (std::size_t k = 0; k < vars; ++k) {
    const auto code = k + 1;
    for (int i = 0; i < n; ++i) {
      const int d = lattice.digit(code, i);
      if (d == 2) lp.constraints[static_cast<std::size_t>(i)][k] = T(1);
      if (d >= 1) lp.constraints[static_cast<std::size_t>(n + i)][k] = T(1);
    }
  }
  for (int i = 0; i < n; ++i) lp.rhs.push_back(x[i].lo);
  for (int i = 0; i < n; ++i) lp.rhs.push_back(x[i].hi);
  return lp;
}

/// Throws NegativeInput for a negative lower endpoint, TooManyCriteria past
/// the LP size cap (n <= 8 exact, n <= 10 float).
template <Scalar T>
ConcaveResult<T> concave_robust(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  if (x.size() != mu.n()) throw Error(ErrorCode::LengthMismatch, "vector length does not match capacity");
  const int cap = kIsExact<T> ? kMaxConcaveCriteriaExact : kMaxConcaveCriteriaFloat;
  if (mu.n() > cap) {
    throw Error(ErrorCode::TooManyCriteria, "concave integral supports at most " + std::to_string(cap) +
                                                " criteria in this mode");
  }
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].lo < T(0)) throw Error(ErrorCode::NegativeInput, "concave integral needs nonnegative evaluations");
  }
  LpSolution<T> solution = [&] {
    try {
      return lp_maximize(concave_program(x, mu));
    } catch (const Error& e) {
      // Nonnegative vectors always admit the comonotone decomposition and
      // every variable is bounded by some x̄_i.
      throw Error(ErrorCode::InvalidArgument, "internal LP failure: " + e.message());
    }
  }();
  ConcaveResult<T> out{solution.optimum, {mu.n(), {}}};
  for (std::size_t k = 0; k < solution.x.size(); ++k) {
    if (solution.x[k] > T(0)) {
      out.certificate.terms.push_back(
          {q_from_index(QIndex{static_cast<std::uint32_t>(k + 1)}, mu.n()), solution.x[k]});
    }
  }
  return out;
}

}  // namespace rcint
