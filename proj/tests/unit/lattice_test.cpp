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

#include <set>

#include <gtest/gtest.h>

namespace rcint {
namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(CriterionSetTest, BasicOperations) {
  const auto a = CriterionSet::of(4, {0, 2});
  const auto b = CriterionSet::of(4, {2, 3});
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ((a | b).bits(), 0b1101U);
  EXPECT_EQ((a & b).bits(), 0b0100U);
  EXPECT_EQ((a - b).bits(), 0b0001U);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.with(1).without(0).members(), (std::vector<int>{1, 2}));
  EXPECT_TRUE(CriterionSet::empty(4).is_empty());
  EXPECT_EQ(CriterionSet::full(4).size(), 4);
}

TEST(CriterionSetTest, Errors) {
  EXPECT_EQ(code_of([] { CriterionSet::of(3, {3}); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { CriterionSet::from_bits(2, 0b100); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { CriterionSet::empty(0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CriterionSet::empty(kMaxCriteria + 1); }), ErrorCode::TooManyCriteria);
  EXPECT_EQ(code_of([] { (void)(CriterionSet::empty(2) | CriterionSet::empty(3)); }), ErrorCode::SizeMismatch);
}

TEST(QPairTest, RejectsUnnestedPairs) {
  EXPECT_EQ(code_of([] { QPair::make(CriterionSet::of(3, {0}), CriterionSet::of(3, {1})); }), ErrorCode::NotNested);
  EXPECT_EQ(code_of([] { QPair::make(CriterionSet::of(2, {0}), CriterionSet::of(3, {0})); }),
            ErrorCode::SizeMismatch);
}

TEST(QPairTest, EnumerationIsABijectionOntoCodes) {
  for (int n = 1; n <= 5; ++n) {
    const auto pairs = enumerate_q(n);
    ASSERT_EQ(pairs.size(), pow3(n));
    for (std::uint32_t code = 0; code < pairs.size(); ++code) {
      EXPECT_EQ(q_index(pairs[code]).code, code);
      EXPECT_TRUE(pairs[code].sure().is_subset_of(pairs[code].possible()));
    }
    std::set<std::pair<CriterionSet::Bits, CriterionSet::Bits>> seen;
    for (const auto& p : pairs) seen.insert({p.sure().bits(), p.possible().bits()});
    EXPECT_EQ(seen.size(), pairs.size());
  }
  EXPECT_EQ(code_of([] { (void)q_from_index(QIndex{27}, 3); }), ErrorCode::OutOfRange);
}

TEST(QPairTest, BoundsAreFirstAndLastCodes) {
  EXPECT_EQ(q_index(QPair::bottom(4)).code, 0U);
  EXPECT_EQ(q_index(QPair::top(4)).code, pow3(4) - 1);
}

TEST(QPairTest, OrderMatchesDigitwiseCodeOrder) {
  for (int n = 1; n <= 3; ++n) {
    const auto lattice = q_lattice(n);
    const auto pairs = enumerate_q(n);
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        EXPECT_EQ(q_leq(p, q), lattice.leq(q_index(p).code, q_index(q).code));
        // Codes increase along the order.
        if (q_leq(p, q)) EXPECT_LE(q_index(p).code, q_index(q).code);
      }
    }
  }
}

TEST(QPairTest, UnionAndIntersectionAreLeastUpperAndGreatestLowerBounds) {
  for (int n = 1; n <= 3; ++n) {
    const auto pairs = enumerate_q(n);
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        const auto join = q_union(p, q);
        const auto meet = q_intersection(p, q);
        ASSERT_TRUE(q_leq(p, join) && q_leq(q, join));
        ASSERT_TRUE(q_leq(meet, p) && q_leq(meet, q));
        for (const auto& r : pairs) {
          if (q_leq(p, r) && q_leq(q, r)) ASSERT_TRUE(q_leq(join, r));
          if (q_leq(r, p) && q_leq(r, q)) ASSERT_TRUE(q_leq(r, meet));
        }
      }
    }
  }
}

TEST(QPairTest, LatticeIsDistributive) {
  for (int n = 1; n <= 3; ++n) {
    const auto pairs = enumerate_q(n);
    for (const auto& p : pairs) {
      for (const auto& q : pairs) {
        for (const auto& r : pairs) {
          ASSERT_EQ(q_intersection(p, q_union(q, r)), q_union(q_intersection(p, q), q_intersection(p, r)));
          ASSERT_EQ(q_union(p, q_intersection(q, r)), q_intersection(q_union(p, q), q_union(p, r)));
        }
      }
    }
  }
}

TEST(QPairTest, Formatting) {
  const Labels labels = {"M", "Ph", "L"};
  const auto p = QPair::make(CriterionSet::of(3, {0, 1}), CriterionSet::full(3));
  EXPECT_EQ(format_qpair(p, labels), "A={M,Ph};B={M,Ph,L}");
  EXPECT_EQ(format_set(CriterionSet::empty(3), labels), "{}");
  EXPECT_EQ(default_labels(3), (Labels{"1", "2", "3"}));
}

TEST(ChainProductTest, CoversGenerateTheOrder) {
  const ChainProduct lattice(3, 4);
  EXPECT_EQ(lattice.size(), 64U);
  std::size_t covers = 0;
  lattice.for_each_cover([&](ChainProduct::Code lo, ChainProduct::Code hi, int) {
    EXPECT_TRUE(lattice.leq(lo, hi));
    ++covers;
  });
  // Each of the 3 coordinates has 3 steps in each of 16 columns.
  EXPECT_EQ(covers, 3U * 3U * 16U);
  EXPECT_EQ(lattice.uniform(2), 2U + 2U * 4U + 2U * 16U);
}

}  // namespace
}  // namespace rcint
