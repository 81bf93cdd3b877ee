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

// Worked examples with partially specified capacities, completed in two
// ways: the smallest monotone completion (each pair takes the largest
// listed value below it) and the largest (the smallest listed value above).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rcint/capacity.hpp"
#include "rcint/interval.hpp"

namespace rcint::testing {

enum class Completion { Minimal, Maximal };

/// Listed values keyed by pair; bottom = 0 and top = M are implied.
template <Scalar T>
IntervalCapacity<T> complete(int n, const T& top, const std::vector<std::pair<QPair, T>>& listed, Completion how) {
  std::vector<std::pair<QPair, T>> all = listed;
  all.emplace_back(QPair::bottom(n), T(0));
  all.emplace_back(QPair::top(n), top);
  std::vector<T> values;
  for (const auto& p : enumerate_q(n)) {
    T v = how == Completion::Minimal ? T(0) : top;
    for (const auto& [q, value] : all) {
      if (how == Completion::Minimal && q_leq(q, p)) v = std::max(v, value);
      if (how == Completion::Maximal && q_leq(p, q)) v = std::min(v, value);
    }
    values.push_back(v);
  }
  return IntervalCapacity<T>(n, top, std::move(values));
}

inline QPair pair_of(int n, std::initializer_list<int> sure, std::initializer_list<int> possible) {
  return QPair::make(CriterionSet::of(n, sure), CriterionSet::of(n, possible));
}

// Students: criteria Mathematics (0), Physics (1), Literature (2), graded
// on a 10-point scale; the capacity lives on [0,1].
namespace dean {

inline const Labels kLabels = {"M", "Ph", "L"};

template <Scalar T>
std::vector<std::pair<QPair, T>> listed() {
  return {
      {pair_of(3, {0, 1}, {0, 1, 2}), scalar_from_ratio<T>(9, 10)},
      {pair_of(3, {1}, {0, 1, 2}), scalar_from_ratio<T>(7, 10)},
      {pair_of(3, {0, 1}, {0, 1}), scalar_from_ratio<T>(5, 10)},
  };
}

template <Scalar T>
IntervalCapacity<T> capacity(Completion how) {
  return complete<T>(3, T(1), listed<T>(), how);
}

template <Scalar T>
IntervalVector<T> s1() {
  return IntervalVector<T>{{T(8), T(8)}, {T(8), T(8)}, {T(7), T(7)}};
}
template <Scalar T>
IntervalVector<T> s2() {
  return IntervalVector<T>{{T(7), T(8)}, {T(8), T(8)}, {T(6), T(8)}};
}
template <Scalar T>
IntervalVector<T> s3() {
  return IntervalVector<T>{{T(9), T(9)}, {T(9), T(9)}, {T(5), T(6)}};
}

}  // namespace dean

// Two criteria on a 10-point scale, fully specified.
namespace sugeno_small {

template <Scalar T>
IntervalCapacity<T> capacity() {
  std::vector<std::pair<QPair, T>> v = {
      {pair_of(2, {}, {}), T(0)},   {pair_of(2, {}, {0}), T(3)},   {pair_of(2, {}, {1}), T(2)},
      {pair_of(2, {}, {0, 1}), T(5)}, {pair_of(2, {0}, {0}), T(4)},  {pair_of(2, {0}, {0, 1}), T(6)},
      {pair_of(2, {1}, {1}), T(4)},  {pair_of(2, {1}, {0, 1}), T(7)}, {pair_of(2, {0, 1}, {0, 1}), T(10)},
  };
  std::vector<T> values(9);
  for (const auto& [p, x] : v) values[q_index(p).code] = x;
  return IntervalCapacity<T>(2, T(10), std::move(values));
}

template <Scalar T>
IntervalVector<T> x() {
  return IntervalVector<T>{{T(5), T(9)}, {T(2), T(4)}};
}

}  // namespace sugeno_small

// Four economics subjects on a 30-point scale; m1, m2 form a block.
namespace economics {

inline const Labels kLabels = {"m1", "m2", "m3", "m4"};

template <Scalar T>
std::vector<std::pair<QPair, T>> listed() {
  return {
      {pair_of(4, {0, 1, 2}, {0, 1, 2, 3}), T(29)}, {pair_of(4, {0, 1}, {0, 1, 2, 3}), T(28)},
      {pair_of(4, {1}, {0, 1, 2, 3}), T(24)},       {pair_of(4, {1}, {0, 1}), T(23)},
      {pair_of(4, {}, {0, 1}), T(20)},
  };
}

template <Scalar T>
IntervalCapacity<T> capacity(Completion how) {
  return complete<T>(4, T(30), listed<T>(), how);
}

template <Scalar T>
IntervalVector<T> x() {
  return IntervalVector<T>{{T(26), T(30)}, {T(28), T(30)}, {T(24), T(27)}, {T(23), T(27)}};
}

}  // namespace economics

// Four vectors for tail independence. At levels t <= 3 the cuts of x and y
// coincide, as do those of w and z; above 3, x cuts like w and y like z.
namespace tails {

template <Scalar T>
IntervalVector<T> make(std::initializer_list<std::pair<int, int>> items) {
  std::vector<Interval<T>> out;
  for (const auto& [lo, hi] : items) out.push_back({T(lo), T(hi)});
  return IntervalVector<T>(std::move(out));
}

template <Scalar T>
IntervalVector<T> x() { return make<T>({{1, 3}, {0, 6}, {2, 3}, {4, 5}}); }
template <Scalar T>
IntervalVector<T> y() { return make<T>({{1, 3}, {0, 4}, {2, 3}, {3, 7}}); }
template <Scalar T>
IntervalVector<T> w() { return make<T>({{0, 2}, {1, 6}, {0, 2}, {4, 5}}); }
template <Scalar T>
IntervalVector<T> z() { return make<T>({{0, 2}, {1, 4}, {0, 2}, {3, 7}}); }

}  // namespace tails

}  // namespace rcint::testing
