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

// Möbius and zeta transforms on Q and on 2^N.
//
// Q is the product of n three-element chains, so the lattice Möbius
// function factors per criterion. The factorized transforms below run in
// O(n·3^n); the closed form with its alternating double sum is kept for
// small n and the two are cross-checked in the tests.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/lattice.hpp"
#include "rcint/scalar.hpp"

namespace rcint {

/// Tolerance for the Möbius characterization checks in float mode.
inline constexpr double kMobiusTolerance = 1e-9;

/// A real-valued table over Q in QIndex order (no monotonicity implied).
template <Scalar T>
struct QTable {
  int n = 0;
  std::vector<T> values;

  QTable() = default;
  QTable(int criteria, std::vector<T> v) : n(criteria), values(std::move(v)) {
    check_criteria_count(n);
    if (values.size() != pow3(n)) {
      throw Error(ErrorCode::WrongLength, "table over Q needs 3^n = " + std::to_string(pow3(n)) +
                                              " entries, got " + std::to_string(values.size()));
    }
  }
  static QTable zeros(int criteria) { return QTable(criteria, std::vector<T>(pow3(criteria), T(0))); }

  [[nodiscard]] T& operator()(const QPair& p) { return values[q_index(p).code]; }
  [[nodiscard]] const T& operator()(const QPair& p) const { return values[q_index(p).code]; }
  [[nodiscard]] const T& at_bits(CriterionSet::Bits sure, CriterionSet::Bits possible) const {
    return values[detail::q_code(n, sure, possible)];
  }
  friend bool operator==(const QTable&, const QTable&) = default;
};

template <Scalar T>
QTable<T> as_table(const IntervalCapacity<T>& mu) {
  return QTable<T>(mu.n(), std::vector<T>(mu.values().begin(), mu.values().end()));
}

/// f(A,B) = Σ_{(C,D) ⊆ (A,B)} g(C,D).
template <Scalar T>
QTable<T> zeta(const QTable<T>& g) {
  QTable<T> f = g;
  const ChainProduct lattice = q_lattice(g.n);
  for (int i = 0; i < g.n; ++i) {
    const auto stride = lattice.stride(i);
    for (ChainProduct::Code c = 0; c < lattice.size(); ++c) {
      if (lattice.digit(c, i) > 0) f.values[c] += f.values[c - stride];
    }
  }
  return f;
}

/// Inverse of zeta via per-criterion differences.
template <Scalar T>
QTable<T> mobius_factorized(const QTable<T>& f) {
  QTable<T> g = f;
  const ChainProduct lattice = q_lattice(f.n);
  for (int i = 0; i < f.n; ++i) {
    const auto stride = lattice.stride(i);
    for (ChainProduct::Code c = lattice.size(); c-- > 0;) {
      if (lattice.digit(c, i) > 0) g.values[c] -= g.values[c - stride];
    }
  }
  return g;
}

/// The closed-form inverse
///   g(A,B) = Σ_{X⊆A} (-1)^|X| Σ_{(C,D) ⊆ (A∖X, B∖X)} (-1)^{|B∖A| - |D∖C|} f(C,D),
/// evaluated term by term. Exponential in n; intended for n <= 5.
template <Scalar T>
QTable<T> mobius_closed_form(const QTable<T>& f) {
  using Bits = CriterionSet::Bits;
  const int n = f.n;
  QTable<T> g = QTable<T>::zeros(n);
  for (std::uint32_t code = 0; code < pow3(n); ++code) {
    const QPair p = q_from_index(QIndex{code}, n);
    const Bits a = p.sure().bits();
    const Bits b = p.possible().bits();
    const int free_count = std::popcount(b & ~a);
    T total(0);
    for (Bits x = a;; x = (x - 1) & a) {
      const Bits a_rest = a & ~x;
      const Bits b_rest = b & ~x;
      T inner(0);
      for (Bits c = a_rest;; c = (c - 1) & a_rest) {
        const Bits room = b_rest & ~c;
        for (Bits extra = room;; extra = (extra - 1) & room) {
          const Bits d = c | extra;
          const bool negative = ((free_count - std::popcount(extra)) & 1) != 0;
          if (negative) {
            inner -= f.at_bits(c, d);
          } else {
            inner += f.at_bits(c, d);
          }
          if (extra == 0) break;
        }
        if (c == 0) break;
      }
      if (std::popcount(x) % 2 == 0) {
        total += inner;
      } else {
        total -= inner;
      }
      if (x == 0) break;
    }
    g.values[code] = total;
  }
  return g;
}

/// Closed form for n <= 5, factorized transform beyond.
template <Scalar T>
QTable<T> mobius(const QTable<T>& f) {
  return f.n <= 5 ? mobius_closed_form(f) : mobius_factorized(f);
}

/// Möbius inverse m of an interval capacity, with the capacity's scale.
/// For a valid capacity m(∅,∅) = 0 and Σ m = M.
template <Scalar T>
struct MobiusRepresentation {
  QTable<T> table;
  T top = T(1);

  [[nodiscard]] int n() const noexcept { return table.n; }
};

template <Scalar T>
MobiusRepresentation<T> mobius(const IntervalCapacity<T>& mu) {
  return {mobius(as_table(mu)), mu.top()};
}

/// zeta(m) as a validated interval capacity (throws like the constructor).
template <Scalar T>
IntervalCapacity<T> capacity_from_mobius(const MobiusRepresentation<T>& m) {
  auto f = zeta(m.table);
  return IntervalCapacity<T>(m.n(), m.top, std::move(f.values));
}

struct MobiusViolation {
  int condition = 0;     // 1..4
  int element = -1;      // a (condition 3) or b (condition 4); -1 otherwise
  std::uint32_t code = 0;  // the pair (A,B); 0 for conditions 1-2
  std::string message;
};

template <Scalar T>
struct MobiusCheck {
  bool ok = true;
  std::vector<MobiusViolation> violations;
};

/// Checks the four Möbius-side conditions characterizing interval
/// capacities:
///   1. m(∅,∅) = 0
///   2. Σ_Q m = M
///   3. Σ_{{a}⊆C⊆A} Σ_{C⊆D⊆B} m(C,D) >= 0 for all a ∈ A ⊆ B
///   4. Σ_{{b}⊆D⊆B} Σ_{C⊆A∩D} m(C,D) >= 0 for all b ∈ B ⊇ A
/// Every violated instance is reported.
template <Scalar T>
MobiusCheck<T> check_interval_capacity_mobius(const MobiusRepresentation<T>& m, const Labels& labels = {},
                                              double tol = kMobiusTolerance) {
  using Bits = CriterionSet::Bits;
  const int n = m.n();
  const Labels names = labels.empty() ? default_labels(n) : labels;
  const QTable<T>& table = m.table;
  MobiusCheck<T> out;
  const auto fail = [&](int condition, int element, std::uint32_t code, std::string message) {
    out.ok = false;
    out.violations.push_back({condition, element, code, std::move(message)});
  };

  if (!nearly_equal(table.values.front(), T(0), tol)) {
    fail(1, -1, 0, "m(∅,∅) = " + format_scalar(table.values.front()) + ", must be 0");
  }
  T total(0);
  for (const auto& v : table.values) total += v;
  if (!nearly_equal(total, m.top, tol)) {
    fail(2, -1, 0, "Möbius masses sum to " + format_scalar(total) + ", must be " + format_scalar(m.top));
  }

  const T floor(0);
  for (std::uint32_t code = 0; code < pow3(n); ++code) {
    const QPair p = q_from_index(QIndex{code}, n);
    const Bits a = p.sure().bits();
    const Bits b = p.possible().bits();
    for (int e = 0; e < n; ++e) {
      const Bits bit = Bits{1} << e;
      if (a & bit) {
        T sum(0);
        const Bits rest = a & ~bit;
        for (Bits c0 = rest;; c0 = (c0 - 1) & rest) {
          const Bits c = c0 | bit;
          const Bits room = b & ~c;
          for (Bits extra = room;; extra = (extra - 1) & room) {
            sum += table.at_bits(c, c | extra);
            if (extra == 0) break;
          }
          if (c0 == 0) break;
        }
        if (!at_least(sum, floor, tol)) {
          fail(3, e, code, "condition 3 fails for a=" + names[static_cast<std::size_t>(e)] + " at " +
                               format_qpair(p, names) + " (sum " + format_scalar(sum) + ")");
        }
      }
      if (b & bit) {
        T sum(0);
        const Bits rest = b & ~bit;
        for (Bits d0 = rest;; d0 = (d0 - 1) & rest) {
          const Bits d = d0 | bit;
          const Bits sure = a & d;
          for (Bits c = sure;; c = (c - 1) & sure) {
            sum += table.at_bits(c, d);
            if (c == 0) break;
          }
          if (d0 == 0) break;
        }
        if (!at_least(sum, floor, tol)) {
          fail(4, e, code, "condition 4 fails for b=" + names[static_cast<std::size_t>(e)] + " at " +
                               format_qpair(p, names) + " (sum " + format_scalar(sum) + ")");
        }
      }
    }
  }
  return out;
}

template <Scalar T>
bool is_interval_capacity_mobius(const MobiusRepresentation<T>& m, double tol = kMobiusTolerance) {
  return check_interval_capacity_mobius(m, {}, tol).ok;
}

// ---------------------------------------------------------------------------
// Classical transforms on 2^N (tables indexed by bitmask).

/// g(B) = Σ_{D⊆B} (-1)^{|B∖D|} f(D).
template <Scalar T>
std::vector<T> mobius_classical(std::span<const T> f) {
  std::vector<T> g(f.begin(), f.end());
  for (std::size_t bit = 1; bit < g.size(); bit <<= 1) {
    for (std::size_t s = 0; s < g.size(); ++s) {
      if (s & bit) g[s] -= g[s ^ bit];
    }
  }
  return g;
}

template <Scalar T>
std::vector<T> mobius_classical(const Capacity<T>& nu) {
  return mobius_classical<T>(nu.values());
}

/// f(B) = Σ_{D⊆B} g(D).
template <Scalar T>
std::vector<T> zeta_classical(std::span<const T> g) {
  std::vector<T> f(g.begin(), g.end());
  for (std::size_t bit = 1; bit < f.size(); bit <<= 1) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (s & bit) f[s] += f[s ^ bit];
    }
  }
  return f;
}

}  // namespace rcint
