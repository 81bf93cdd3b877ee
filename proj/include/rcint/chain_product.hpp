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

#include <cstdint>
#include <vector>

#include "rcint/error.hpp"

namespace rcint {

/// Dense mixed-radix indexing of the product of `n` chains with `levels`
/// elements each. Q is the case levels = 3, 2^N is levels = 2, the bipolar
/// lattice is levels = 5 and m-point chains use levels = m + 1. The product
/// order is digit-wise comparison, and ascending code order is a linear
/// extension of it.
class ChainProduct {
 public:
  using Code = std::uint64_t;

  ChainProduct(int n, int levels) : n_(n), levels_(levels), strides_(static_cast<std::size_t>(n) + 1) {
    if (n < 0 || levels < 2) {
      throw Error(ErrorCode::InvalidArgument, "chain product needs n >= 0 and levels >= 2");
    }
    strides_[0] = 1;
    for (int i = 0; i < n; ++i) {
      const Code next = strides_[static_cast<std::size_t>(i)] * static_cast<Code>(levels);
      if (next / static_cast<Code>(levels) != strides_[static_cast<std::size_t>(i)] ||
          next > (Code{1} << 40)) {
        throw Error(ErrorCode::TooManyCriteria, "lattice too large to index densely");
      }
      strides_[static_cast<std::size_t>(i) + 1] = next;
    }
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int levels() const noexcept { return levels_; }
  [[nodiscard]] Code size() const noexcept { return strides_.back(); }
  [[nodiscard]] Code stride(int i) const noexcept { return strides_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] Code top() const noexcept { return size() - 1; }

  [[nodiscard]] int digit(Code code, int i) const noexcept {
    return static_cast<int>((code / stride(i)) % static_cast<Code>(levels_));
  }

  /// Code with every digit equal to `d`.
  [[nodiscard]] Code uniform(int d) const noexcept {
    Code c = 0;
    for (int i = 0; i < n_; ++i) c += static_cast<Code>(d) * stride(i);
    return c;
  }

  [[nodiscard]] bool leq(Code a, Code b) const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (digit(a, i) > digit(b, i)) return false;
    }
    return true;
  }

  /// Calls f(lower, upper, i) for every covering pair lower < upper of the
  /// product order, where the two codes differ by one step in digit i.
  template <class F>
  void for_each_cover(F&& f) const {
    for (Code c = 0; c < size(); ++c) {
      for (int i = 0; i < n_; ++i) {
        if (digit(c, i) > 0) f(c - stride(i), c, i);
      }
    }
  }

 private:
  int n_;
  int levels_;
  std::vector<Code> strides_;
};

}  // namespace rcint
