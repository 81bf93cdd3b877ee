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

#include "rcint/lattice.hpp"

#include <string>

namespace rcint {

void check_criteria_count(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one criterion");
  if (n > kMaxCriteria) {
    throw Error(ErrorCode::TooManyCriteria,
                std::to_string(n) + " criteria requested, at most " +
                    std::to_string(kMaxCriteria) + " supported");
  }
}

CriterionSet CriterionSet::empty(int n) {
  check_criteria_count(n);
  return {n, 0};
}

CriterionSet CriterionSet::full(int n) {
  check_criteria_count(n);
  return {n, (Bits{1} << n) - 1};
}

CriterionSet CriterionSet::from_bits(int n, Bits bits) {
  check_criteria_count(n);
  if ((bits >> n) != 0) {
    throw Error(ErrorCode::OutOfRange, "criterion bitmask uses positions beyond n");
  }
  return {n, bits};
}

CriterionSet CriterionSet::of(int n, std::initializer_list<int> members) {
  return of(n, std::span<const int>(members.begin(), members.size()));
}

CriterionSet CriterionSet::of(int n, std::span<const int> members) {
  check_criteria_count(n);
  Bits bits = 0;
  for (int i : members) {
    if (i < 0 || i >= n) {
      throw Error(ErrorCode::OutOfRange, "criterion index " + std::to_string(i) + " out of range");
    }
    bits |= Bits{1} << i;
  }
  return {n, bits};
}

std::vector<int> CriterionSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

void CriterionSet::require_same_n(const CriterionSet& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::SizeMismatch, "criterion sets over different N");
}

CriterionSet CriterionSet::with(int i) const {
  if (i < 0 || i >= n_) throw Error(ErrorCode::OutOfRange, "criterion index out of range");
  return {n_, bits_ | (Bits{1} << i)};
}

CriterionSet CriterionSet::without(int i) const {
  if (i < 0 || i >= n_) throw Error(ErrorCode::OutOfRange, "criterion index out of range");
  return {n_, bits_ & ~(Bits{1} << i)};
}

CriterionSet CriterionSet::operator|(const CriterionSet& o) const {
  require_same_n(o);
  return {n_, bits_ | o.bits_};
}

CriterionSet CriterionSet::operator&(const CriterionSet& o) const {
  require_same_n(o);
  return {n_, bits_ & o.bits_};
}

CriterionSet CriterionSet::operator-(const CriterionSet& o) const {
  require_same_n(o);
  return {n_, bits_ & ~o.bits_};
}

QPair QPair::make(CriterionSet sure, CriterionSet possible) {
  if (sure.n() != possible.n()) throw Error(ErrorCode::SizeMismatch, "pair components over different N");
  if (!sure.is_subset_of(possible)) {
    throw Error(ErrorCode::NotNested, "sure coalition is not contained in the possible coalition");
  }
  return {sure, possible};
}

bool q_leq(const QPair& p, const QPair& q) {
  if (p.n() != q.n()) throw Error(ErrorCode::SizeMismatch, "pairs over different N");
  return p.sure().is_subset_of(q.sure()) && p.possible().is_subset_of(q.possible());
}

QPair q_union(const QPair& p, const QPair& q) {
  return QPair::make(p.sure() | q.sure(), p.possible() | q.possible());
}

QPair q_intersection(const QPair& p, const QPair& q) {
  return QPair::make(p.sure() & q.sure(), p.possible() & q.possible());
}

std::vector<QPair> enumerate_q(int n) {
  check_criteria_count(n);
  const std::uint32_t size = pow3(n);
  std::vector<QPair> out;
  out.reserve(size);
  for (std::uint32_t code = 0; code < size; ++code) out.push_back(q_from_index(QIndex{code}, n));
  return out;
}

QIndex q_index(const QPair& p) noexcept {
  std::uint32_t code = 0;
  std::uint32_t stride = 1;
  for (int i = 0; i < p.n(); ++i) {
    const std::uint32_t digit = p.sure().contains(i) ? 2U : (p.possible().contains(i) ? 1U : 0U);
    code += digit * stride;
    stride *= 3;
  }
  return QIndex{code};
}

QPair q_from_index(QIndex index, int n) {
  check_criteria_count(n);
  if (index.code >= pow3(n)) {
    throw Error(ErrorCode::OutOfRange,
                "code " + std::to_string(index.code) + " >= 3^" + std::to_string(n));
  }
  CriterionSet::Bits a = 0;
  CriterionSet::Bits b = 0;
  std::uint32_t code = index.code;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t digit = code % 3;
    code /= 3;
    if (digit >= 1) b |= CriterionSet::Bits{1} << i;
    if (digit == 2) a |= CriterionSet::Bits{1} << i;
  }
  return QPair::make(CriterionSet::from_bits(n, a), CriterionSet::from_bits(n, b));
}

Labels default_labels(int n) {
  Labels out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string format_set(const CriterionSet& s, const Labels& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ',';
    first = false;
    out += static_cast<std::size_t>(i) < labels.size() ? labels[static_cast<std::size_t>(i)]
                                                       : std::to_string(i + 1);
  }
  return out + "}";
}

std::string format_qpair(const QPair& p, const Labels& labels) {
  return "A=" + format_set(p.sure(), labels) + ";B=" + format_set(p.possible(), labels);
}

}  // namespace rcint
