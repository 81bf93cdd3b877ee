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

// Criteria sets and the lattice Q = {(A,B) : A ⊆ B ⊆ N}.
//
// Criteria are 0-indexed. A pair (A,B) reads "A satisfied for sure, B
// possibly". Q is stored densely through a base-3 code whose digit i is
// 2 if i ∈ A, 1 if i ∈ B \ A and 0 if i ∉ B.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rcint/chain_product.hpp"
#include "rcint/error.hpp"

namespace rcint {

inline constexpr int kMaxCriteria = 16;

/// Throws unless 1 <= n <= kMaxCriteria.
void check_criteria_count(int n);

/// 3^n.
[[nodiscard]] constexpr std::uint32_t pow3(int n) noexcept {
  std::uint32_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

class CriterionSet {
 public:
  using Bits = std::uint32_t;

  CriterionSet() = default;

  static CriterionSet empty(int n);
  static CriterionSet full(int n);
  /// Throws OutOfRange if `bits` uses positions >= n.
  static CriterionSet from_bits(int n, Bits bits);
  static CriterionSet of(int n, std::initializer_list<int> members);
  static CriterionSet of(int n, std::span<const int> members);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] Bits bits() const noexcept { return bits_; }
  [[nodiscard]] bool contains(int i) const noexcept { return ((bits_ >> i) & 1U) != 0; }
  [[nodiscard]] int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] bool is_empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] bool is_subset_of(const CriterionSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] std::vector<int> members() const;

  [[nodiscard]] CriterionSet with(int i) const;
  [[nodiscard]] CriterionSet without(int i) const;
  [[nodiscard]] CriterionSet operator|(const CriterionSet& o) const;
  [[nodiscard]] CriterionSet operator&(const CriterionSet& o) const;
  /// Set difference.
  [[nodiscard]] CriterionSet operator-(const CriterionSet& o) const;

  friend bool operator==(const CriterionSet&, const CriterionSet&) = default;

 private:
  CriterionSet(int n, Bits bits) : n_(n), bits_(bits) {}
  void require_same_n(const CriterionSet& o) const;

  int n_ = 0;
  Bits bits_ = 0;
};

/// Dense code of a pair in [0, 3^n).
struct QIndex {
  std::uint32_t code = 0;
  friend auto operator<=>(const QIndex&, const QIndex&) = default;
};

class QPair {
 public:
  /// Throws NotNested unless sure ⊆ possible, SizeMismatch on differing n.
  static QPair make(CriterionSet sure, CriterionSet possible);
  static QPair bottom(int n) { return make(CriterionSet::empty(n), CriterionSet::empty(n)); }
  static QPair top(int n) { return make(CriterionSet::full(n), CriterionSet::full(n)); }

  [[nodiscard]] int n() const noexcept { return sure_.n(); }
  /// A: criteria satisfied for sure.
  [[nodiscard]] const CriterionSet& sure() const noexcept { return sure_; }
  /// B: criteria possibly satisfied.
  [[nodiscard]] const CriterionSet& possible() const noexcept { return possible_; }

  friend bool operator==(const QPair&, const QPair&) = default;

 private:
  QPair(CriterionSet a, CriterionSet b) : sure_(a), possible_(b) {}
  CriterionSet sure_;
  CriterionSet possible_;
};

/// (A,B) ⊆ (C,D) iff A ⊆ C and B ⊆ D.
[[nodiscard]] bool q_leq(const QPair& p, const QPair& q);
/// Lattice supremum: componentwise union.
[[nodiscard]] QPair q_union(const QPair& p, const QPair& q);
/// Lattice infimum: componentwise intersection.
[[nodiscard]] QPair q_intersection(const QPair& p, const QPair& q);

/// All 3^n pairs in QIndex order.
[[nodiscard]] std::vector<QPair> enumerate_q(int n);

[[nodiscard]] QIndex q_index(const QPair& p) noexcept;
/// Throws OutOfRange for code >= 3^n.
[[nodiscard]] QPair q_from_index(QIndex index, int n);

/// The chain-product view of Q used for dense tables.
[[nodiscard]] inline ChainProduct q_lattice(int n) { return ChainProduct(n, 3); }

using Labels = std::vector<std::string>;

/// "1", "2", ..., "n".
[[nodiscard]] Labels default_labels(int n);
/// "{M,Ph}".
[[nodiscard]] std::string format_set(const CriterionSet& s, const Labels& labels);
/// "A={M,Ph};B={M,Ph,L}".
[[nodiscard]] std::string format_qpair(const QPair& p, const Labels& labels);

}  // namespace rcint
