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

// Classical Choquet, Sugeno and Shilkret integrals and their robust
// counterparts over interval capacities.
//
// Threshold sets are always taken by comparison at a value (x̲_j >= t),
// never by position in a sorting permutation, so tied values produce the
// same cut and zero-width steps vanish without any tie-breaking.

#include <algorithm>
#include <span>
#include <type_traits>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/interval.hpp"
#include "rcint/mobius.hpp"

namespace rcint {

namespace detail {

template <Scalar T>
void require_length(int got, int expected) {
  if (got != expected) {
    throw Error(ErrorCode::LengthMismatch, "vector of length " + std::to_string(got) +
                                               " for a capacity over " + std::to_string(expected) +
                                               " criteria");
  }
}

template <Scalar T>
void require_in_scale(std::span<const T> xs, const T& top) {
  for (const auto& x : xs) {
    if (x < T(0) || x > top) {
      throw Error(ErrorCode::OutOfScale,
                  "evaluation " + format_scalar(x) + " outside [0, " + format_scalar(top) + "]");
    }
  }
}

template <Scalar T>
CriterionSet::Bits upper_set(std::span<const T> xs, const T& t) {
  CriterionSet::Bits bits = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= t) bits |= CriterionSet::Bits{1} << i;
  }
  return bits;
}

template <Scalar T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical integrals on real vectors.

/// Choquet integral (Schmeidler form, any sign):
/// Σ_{i>=2} (x_(i) - x_(i-1))·ν({j : x_j >= x_(i)})/M + x_(1).
/// The capacity is read on the unit scale so that constants are fixed points.
template <Scalar T>
T choquet(std::span<const std::type_identity_t<T>> x, const Capacity<T>& nu) {
  detail::require_length<T>(static_cast<int>(x.size()), nu.n());
  const auto pts = detail::sorted(std::vector<T>(x.begin(), x.end()));
  T integral(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (pts[k] == pts[k - 1]) continue;
    integral += (pts[k] - pts[k - 1]) * nu.at_bits(detail::upper_set<T>(x, pts[k]));
  }
  return integral / nu.top() + pts.front();
}

/// Sugeno integral, sorted form: max_i min(x_(i), ν(A_(i))).
template <Scalar T>
T sugeno(std::span<const std::type_identity_t<T>> x, const Capacity<T>& nu) {
  detail::require_length<T>(static_cast<int>(x.size()), nu.n());
  detail::require_in_scale<T>(x, nu.top());
  T best(0);
  for (const auto& xi : x) {
    best = std::max(best, std::min(xi, nu.at_bits(detail::upper_set<T>(x, xi))));
  }
  return best;
}

/// Sugeno integral, subset form: max_{A⊆N} min(ν(A), min_{i∈A} x_i).
template <Scalar T>
T sugeno_subsets(std::span<const std::type_identity_t<T>> x, const Capacity<T>& nu) {
  detail::require_length<T>(static_cast<int>(x.size()), nu.n());
  detail::require_in_scale<T>(x, nu.top());
  T best(0);
  const CriterionSet::Bits subsets = CriterionSet::Bits{1} << nu.n();
  for (CriterionSet::Bits s = 1; s < subsets; ++s) {
    T level = nu.at_bits(s);
    for (int i = 0; i < nu.n(); ++i) {
      if ((s >> i) & 1U) level = std::min(level, x[static_cast<std::size_t>(i)]);
    }
    best = std::max(best, level);
  }
  return best;
}

/// Shilkret integral max_i x_i·ν({j : x_j >= x_i}), evaluated on the
/// normalized scale: inputs and capacity are divided by M, so the result
/// lies in [0,1].
template <Scalar T>
T shilkret(std::span<const std::type_identity_t<T>> x, const Capacity<T>& nu) {
  detail::require_length<T>(static_cast<int>(x.size()), nu.n());
  detail::require_in_scale<T>(x, nu.top());
  const T& top = nu.top();
  T best(0);
  for (const auto& xi : x) {
    best = std::max(best, (xi / top) * (nu.at_bits(detail::upper_set<T>(x, xi)) / top));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Robust Choquet integral.

// Every Choquet-type integral below reads μ on the unit scale (μ/M), so
// the result is in the units of the evaluations and constants are fixed.

/// Sorted form over the 2n endpoints:
/// Σ_{i=2}^{2n} (x_(i) - x_(i-1))·μ(A_(i), B_(i))/M + x_(1).
template <Scalar T>
T rci(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  detail::require_length<T>(x.size(), mu.n());
  const auto pts = detail::sorted(x.flattened());
  T integral(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (pts[k] == pts[k - 1]) continue;
    const auto cut = threshold_cut(x, pts[k]);
    integral += (pts[k] - pts[k - 1]) * mu.at_bits(cut.sure, cut.possible);
  }
  return integral / mu.top() + pts.front();
}

/// The defining integral ∫_{min x̲}^{max x̄} μ(A_t, B_t)/M dt + min x̲,
/// integrated segment by segment. The integrand is constant between
/// consecutive distinct endpoints, so evaluating it at each segment's
/// midpoint makes the integral exact.
template <Scalar T>
T rci_riemann(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  detail::require_length<T>(x.size(), mu.n());
  auto pts = detail::sorted(x.flattened());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  T integral(0);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const T mid = (pts[k - 1] + pts[k]) / T(2);
    const auto cut = threshold_cut(x, mid);
    integral += (pts[k] - pts[k - 1]) * mu.at_bits(cut.sure, cut.possible);
  }
  return integral / mu.top() + pts.front();
}

/// Midpoint-rule approximation of the defining integral on a uniform grid
/// of `samples` cells. Diagnostic only: converges to rci() as samples grows.
template <Scalar T>
T rci_midpoint(const IntervalVector<T>& x, const IntervalCapacity<T>& mu, int samples) {
  detail::require_length<T>(x.size(), mu.n());
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const auto lo = x.lower();
  const auto hi = x.upper();
  const T start = *std::min_element(lo.begin(), lo.end());
  const T stop = *std::max_element(hi.begin(), hi.end());
  const T width = (stop - start) / T(samples);
  T integral(0);
  for (int s = 0; s < samples; ++s) {
    const T t = start + width * (T(s) + T(1) / T(2));
    const auto cut = threshold_cut(x, t);
    integral += mu.at_bits(cut.sure, cut.possible);
  }
  return integral * width / mu.top() + start;
}

/// Möbius form: Σ_{(A,B)} m(A,B)·min(min_{i∈A} x̲_i, min_{i∈B} x̄_i) / M.
/// The (∅,∅) term is skipped (m(∅,∅) = 0 for every interval capacity).
template <Scalar T>
T rci_mobius(const IntervalVector<T>& x, const QTable<T>& m, const T& top = T(1)) {
  detail::require_length<T>(x.size(), m.n);
  const ChainProduct lattice = q_lattice(m.n);
  T result(0);
  for (ChainProduct::Code code = 1; code < lattice.size(); ++code) {
    const T& mass = m.values[code];
    if (mass == T(0)) continue;
    const T* meet = nullptr;
    for (int i = 0; i < m.n; ++i) {
      const int d = lattice.digit(code, i);
      if (d == 0) continue;
      const T& v = d == 2 ? x[i].lo : x[i].hi;
      if (meet == nullptr || v < *meet) meet = &v;
    }
    result += mass * *meet;
  }
  return result / top;
}

template <Scalar T>
T rci_mobius(const IntervalVector<T>& x, const MobiusRepresentation<T>& m) {
  return rci_mobius(x, m.table, m.top);
}

// ---------------------------------------------------------------------------
// Robust Sugeno and Shilkret integrals. Evaluations must lie in [0, M].

/// Max-min over all of Q:
/// max_{(A,B)} min(min_{i∈A} x̲_i, min_{i∈B∖A} x̄_i, μ(A,B)).
template <Scalar T>
T rsi(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  detail::require_length<T>(x.size(), mu.n());
  detail::require_in_scale<T>(x.flattened(), mu.top());
  const ChainProduct lattice = q_lattice(mu.n());
  T best(0);
  for (ChainProduct::Code code = 1; code < lattice.size(); ++code) {
    T level = mu.values()[code];
    for (int i = 0; i < mu.n(); ++i) {
      const int d = lattice.digit(code, i);
      if (d == 2) level = std::min(level, x[i].lo);
      if (d == 1) level = std::min(level, x[i].hi);
    }
    best = std::max(best, level);
  }
  return best;
}

/// Sorted form over the 2n endpoints: max_i min(x_(i), μ(A_(i), B_(i))).
template <Scalar T>
T rsi_sorted(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  detail::require_length<T>(x.size(), mu.n());
  const auto pts = x.flattened();
  detail::require_in_scale<T>(pts, mu.top());
  T best(0);
  for (const auto& t : pts) {
    const auto cut = threshold_cut(x, t);
    best = std::max(best, std::min(t, mu.at_bits(cut.sure, cut.possible)));
  }
  return best;
}

/// max_{(A,B)} min(min_{i∈A} x̲_i, min_{i∈B} x̄_i)·μ(A,B) on the normalized
/// scale (inputs and capacity divided by M); the result lies in [0,1].
template <Scalar T>
T robust_shilkret(const IntervalVector<T>& x, const IntervalCapacity<T>& mu) {
  detail::require_length<T>(x.size(), mu.n());
  detail::require_in_scale<T>(x.flattened(), mu.top());
  const ChainProduct lattice = q_lattice(mu.n());
  const T& top = mu.top();
  T best(0);
  for (ChainProduct::Code code = 1; code < lattice.size(); ++code) {
    const T* meet = nullptr;
    for (int i = 0; i < mu.n(); ++i) {
      const int d = lattice.digit(code, i);
      if (d == 0) continue;
      const T& v = d == 2 ? x[i].lo : x[i].hi;
      if (meet == nullptr || v < *meet) meet = &v;
    }
    best = std::max(best, (*meet / top) * (mu.values()[code] / top));
  }
  return best;
}

}  // namespace rcint
