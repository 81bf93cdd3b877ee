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

// Brute-force reference implementations. Each one follows a definition
// directly and shares no code path with the library routine it checks.

#include <algorithm>
#include <optional>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/lattice.hpp"
#include "rcint/lp.hpp"
#include "rcint/mobius.hpp"

namespace rcint::testing {

/// Pairs of Q sorted by (|B|, |A|): every strict predecessor comes first.
inline std::vector<QPair> q_in_rank_order(int n) {
  auto pairs = enumerate_q(n);
  std::stable_sort(pairs.begin(), pairs.end(), [](const QPair& p, const QPair& q) {
    if (p.possible().size() != q.possible().size()) return p.possible().size() < q.possible().size();
    return p.sure().size() < q.sure().size();
  });
  return pairs;
}

/// m(A,B) = f(A,B) - Σ_{(C,D) ⊊ (A,B)} m(C,D), filled in rank order.
template <Scalar T>
QTable<T> mobius_recursive(const QTable<T>& f) {
  const int n = f.n;
  const auto order = q_in_rank_order(n);
  QTable<T> m = QTable<T>::zeros(n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const QPair& p = order[k];
    T value = f(p);
    for (std::size_t j = 0; j < k; ++j) {
      if (q_leq(order[j], p) && !(order[j] == p)) value -= m(order[j]);
    }
    m.values[q_index(p).code] = value;
  }
  return m;
}

/// f(A,B) = Σ_{(C,D) ⊆ (A,B)} g(C,D) by scanning all pairs.
template <Scalar T>
QTable<T> zeta_brute(const QTable<T>& g) {
  const auto pairs = enumerate_q(g.n);
  QTable<T> f = QTable<T>::zeros(g.n);
  for (const auto& p : pairs) {
    T sum(0);
    for (const auto& q : pairs) {
      if (q_leq(q, p)) sum += g(q);
    }
    f.values[q_index(p).code] = sum;
  }
  return f;
}

/// Boundary values and monotonicity over every comparable pair of Q.
template <Scalar T>
bool is_interval_capacity_direct(int n, const T& top, const std::vector<T>& values) {
  const auto pairs = enumerate_q(n);
  if (values[q_index(QPair::bottom(n)).code] != T(0)) return false;
  if (values[q_index(QPair::top(n)).code] != top) return false;
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      if (q_leq(p, q) && values[q_index(p).code] > values[q_index(q).code]) return false;
    }
  }
  return true;
}

/// Classical Möbius inverse by its alternating-sum definition:
/// m(A) = Σ_{B ⊆ A} (-1)^{|A∖B|} ν(B).
template <Scalar T>
std::vector<T> mobius_alternating(const std::vector<T>& nu, int n) {
  std::vector<T> m(nu.size(), T(0));
  const std::uint32_t full = 1U << n;
  for (std::uint32_t a = 0; a < full; ++a) {
    T sum(0);
    for (std::uint32_t b = 0; b < full; ++b) {
      if ((b & ~a) != 0) continue;
      const int parity = std::popcount(a & ~b) % 2;
      sum += parity == 0 ? nu[b] : T(-nu[b]);
    }
    m[a] = sum;
  }
  return m;
}

/// Choquet integral through the classical Möbius form Σ m(A)·min_{i∈A} x_i / M.
template <Scalar T>
T choquet_mobius_oracle(const std::vector<T>& x, const Capacity<T>& nu) {
  const int n = nu.n();
  const std::vector<T> values(nu.values().begin(), nu.values().end());
  const auto m = mobius_alternating(values, n);
  T total(0);
  for (std::uint32_t a = 1; a < (1U << n); ++a) {
    std::optional<T> meet;
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1U) meet = meet ? std::min(*meet, x[static_cast<std::size_t>(i)]) : x[static_cast<std::size_t>(i)];
    }
    total += m[a] * *meet;
  }
  return total / nu.top();
}

/// Sugeno integral by max over subsets of min(ν(A), min_{i∈A} x_i).
template <Scalar T>
T sugeno_brute(const std::vector<T>& x, const Capacity<T>& nu) {
  T best(0);
  for (std::uint32_t a = 1; a < (1U << nu.n()); ++a) {
    T level = nu.at_bits(a);
    for (int i = 0; i < nu.n(); ++i) {
      if ((a >> i) & 1U) level = std::min(level, x[static_cast<std::size_t>(i)]);
    }
    best = std::max(best, level);
  }
  return best;
}

/// Solves E_S α = b for the columns in S by Gauss-Jordan elimination.
/// Returns nothing if the columns are dependent or the system inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(const RationalLP& lp, const std::vector<std::size_t>& cols) {
  const std::size_t rows = lp.constraints.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = lp.constraints[r][cols[c]];
    a[r][k] = lp.rhs[r];
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent column
    std::swap(a[p], a[pivot_row]);
    const Rational piv = a[pivot_row][c];
    for (auto& v : a[pivot_row]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t j = 0; j <= k; ++j) a[r][j] -= factor * a[pivot_row][j];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (a[r][k] != 0) return std::nullopt;
  }
  std::vector<Rational> out(k);
  for (std::size_t c = 0; c < k; ++c) out[c] = a[c][k];
  return out;
}

/// Maximum of the objective over all basic feasible solutions, found by
/// trying every column subset of size <= rows. Nothing if infeasible.
/// Only meaningful for bounded programs.
inline std::optional<Rational> lp_vertex_oracle(const RationalLP& lp) {
  const std::size_t vars = lp.objective.size();
  const std::size_t rows = lp.constraints.size();
  std::optional<Rational> best;
  std::vector<std::size_t> cols;
  const auto visit = [&](auto&& self, std::size_t next) -> void {
    if (auto sol = solve_columns(lp, cols)) {
      if (std::all_of(sol->begin(), sol->end(), [](const Rational& v) { return v >= 0; })) {
        Rational value = 0;
        for (std::size_t c = 0; c < cols.size(); ++c) value += lp.objective[cols[c]] * (*sol)[c];
        if (!best || value > *best) best = value;
      }
    }
    if (cols.size() == rows) return;
    for (std::size_t j = next; j < vars; ++j) {
      cols.push_back(j);
      self(self, j + 1);
      cols.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

}  // namespace rcint::testing
