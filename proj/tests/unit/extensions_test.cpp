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

#include "rcint/extensions.hpp"

#include <gtest/gtest.h>

#include "rcint/integrals.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace rcint {
namespace {

using testing::Rng;

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

IntervalVector<Rational> negate(const IntervalVector<Rational>& x) {
  std::vector<Interval<Rational>> items;
  for (const auto& it : x.items()) items.push_back({Rational(-it.hi), Rational(-it.lo)});
  return IntervalVector<Rational>(std::move(items));
}

// ---------------------------------------------------------------------------
// Bipolar

TEST(BipolarQuadTest, InvariantsAndCodes) {
  const auto s = [](std::initializer_list<int> m) { return CriterionSet::of(3, m); };
  EXPECT_EQ(code_of([&] { BipolarQuad::make(s({0}), s({}), s({}), s({})); }), ErrorCode::NotNested);
  EXPECT_EQ(code_of([&] { BipolarQuad::make(s({}), s({}), s({}), s({1})); }), ErrorCode::NotNested);
  EXPECT_EQ(code_of([&] { BipolarQuad::make(s({}), s({0}), s({0}), s({})); }), ErrorCode::NotNested);
  for (int n = 1; n <= 3; ++n) {
    const auto lattice = bipolar_lattice(n);
    for (ChainProduct::Code c = 0; c < lattice.size(); ++c) {
      const auto q = BipolarQuad::from_code(c, n);
      EXPECT_EQ(q.code(), c);
      EXPECT_EQ(q.mirrored().mirrored(), q);
    }
  }
  EXPECT_EQ(code_of([] { (void)bipolar_lattice(kMaxBipolarCriteria + 1); }), ErrorCode::TooManyCriteria);
}

TEST(BipolarTest, PolesBuildValidCapacities) {
  Rng rng(501);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto values = testing::random_monotone_table(rng, q_lattice(n));
    const auto other = testing::random_monotone_table(rng, q_lattice(n));
    const Rational top = values.back() * other.back();
    std::vector<Rational> a;
    std::vector<Rational> b;
    for (long long v : values) a.push_back(Rational(v * other.back()));
    for (long long v : other) b.push_back(Rational(v * values.back()));
    const IntervalCapacity<Rational> pos(n, top, a);
    const IntervalCapacity<Rational> neg(n, top, b);
    const auto mu = bipolar_from_poles(pos, neg);
    EXPECT_TRUE(validate_bipolar_capacity<Rational>(n, top, mu.values()).empty());
  }
}

TEST(BipolarTest, NonnegativeVectorsMatchTheRobustChoquetIntegral) {
  Rng rng(502);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto mu = testing::random_interval_capacity<Rational>(rng, n);
    const auto bmu = bipolar_from_poles(mu, mu);
    const auto x = testing::random_interval_vector<Rational>(rng, n, 0, 80);
    EXPECT_EQ(bipolar_rci(x, bmu), rci(x, mu));
  }
}

TEST(BipolarTest, SymmetricCapacityIsOdd) {
  Rng rng(503);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const auto mu = testing::random_interval_capacity<Rational>(rng, n);
    const auto bmu = bipolar_from_poles(mu, mu);
    // Each interval lies on one side of zero.
    auto x = testing::random_interval_vector<Rational>(rng, n, 0, 80);
    std::vector<Interval<Rational>> items(x.items().begin(), x.items().end());
    for (auto& it : items) {
      if (testing::uniform_int(rng, 0, 1) == 1) it = {Rational(-it.hi), Rational(-it.lo)};
    }
    const IntervalVector<Rational> y(items);
    EXPECT_EQ(bipolar_rci(negate(y), bmu), -bipolar_rci(y, bmu));
  }
}

TEST(BipolarTest, HandComputedNegativeCase) {
  // n = 1, μ(∅,{1}) = 1/2. x = [-2,-1]: level (0,1] sees the sure negative
  // quadruple (-1), level (1,2] the possible one (-1/2).
  const IntervalCapacity<Rational> mu(1, 1, {0, Rational(1, 2), 1});
  const auto bmu = bipolar_from_poles(mu, mu);
  const IntervalVector<Rational> x{{Rational(-2), Rational(-1)}};
  EXPECT_EQ(bipolar_rci(x, bmu), Rational(-3, 2));
  EXPECT_EQ(bipolar_rci(IntervalVector<Rational>::constant(1, 0), bmu), 0);
  const IntervalVector<Rational> straddle{{Rational(-1), Rational(1)}};
  EXPECT_EQ(code_of([&] { bipolar_rci(straddle, bmu); }), ErrorCode::OutOfDomain);
}

TEST(BipolarTest, RejectsBadBoundaries) {
  std::vector<double> v(25, 0.0);
  EXPECT_FALSE(validate_bipolar_capacity<double>(2, 1.0, v).empty());
  EXPECT_EQ(code_of([&] { BipolarIntervalCapacity<double>(2, 1.0, v); }), ErrorCode::BadBoundary);
}

// ---------------------------------------------------------------------------
// Level-dependent

TEST(LevelDependentTest, ConstantCapacityIsTheRobustChoquetIntegral) {
  Rng rng(511);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto mu = testing::random_interval_capacity<Rational>(rng, n);
    const auto x = testing::random_interval_vector<Rational>(rng, n);
    EXPECT_EQ(rci_level_dependent(x, LevelDependentCapacity<Rational>::constant(mu)), rci(x, mu));
  }
}

TEST(LevelDependentTest, MatchesPiecewiseDefinitionByDenseSampling) {
  Rng rng(512);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const auto mu = testing::random_level_capacity<Rational>(rng, n, 0, 10);
    const auto x = testing::random_interval_vector<Rational>(rng, n, 0, 80);
    // All breakpoints are multiples of 1/8: a grid of 1/16 midpoints is exact.
    const auto lo = x.lower();
    const auto hi = x.upper();
    const Rational start = *std::min_element(lo.begin(), lo.end());
    const Rational stop = *std::max_element(hi.begin(), hi.end());
    Rational integral = 0;
    for (Rational t = start; t < stop; t += Rational(1, 8)) {
      const Rational mid = t + Rational(1, 16);
      const auto cut = threshold_cut(x, mid);
      integral += mu.at_level(mid).at_bits(cut.sure, cut.possible) / 8;
    }
    EXPECT_EQ(rci_level_dependent(x, mu), integral / mu.top() + start);
  }
}

TEST(LevelDependentTest, IdempotentAndMonotone) {
  Rng rng(513);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const auto mu = testing::random_level_capacity<Rational>(rng, n, 0, 10);
    const Rational k = testing::random_eighth<Rational>(rng, 0, 80);
    EXPECT_EQ(rci_level_dependent(IntervalVector<Rational>::constant(n, k), mu), k);
    const auto x = testing::random_interval_vector<Rational>(rng, n, 0, 60);
    const auto y = testing::random_dominating(rng, x);
    EXPECT_LE(rci_level_dependent(x, mu), rci_level_dependent(y, mu));
  }
}

TEST(LevelDependentTest, TailIndependence) {
  Rng rng(514);
  using testing::tails::w;
  using testing::tails::x;
  using testing::tails::y;
  using testing::tails::z;
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = testing::random_level_capacity<double>(rng, 4, 0, 7);
    const double lhs = rci_level_dependent(x<double>(), mu) - rci_level_dependent(y<double>(), mu);
    const double rhs = rci_level_dependent(w<double>(), mu) - rci_level_dependent(z<double>(), mu);
    EXPECT_NEAR(lhs, rhs, 1e-9);
    const auto exact = testing::random_level_capacity<Rational>(rng, 4, 0, 7);
    EXPECT_EQ(rci_level_dependent(x<Rational>(), exact) - rci_level_dependent(y<Rational>(), exact),
              rci_level_dependent(w<Rational>(), exact) - rci_level_dependent(z<Rational>(), exact));
  }
}

TEST(LevelDependentTest, DomainAndShapeErrors) {
  const IntervalCapacity<double> mu(1, 1.0, {0, 0.5, 1});
  const IntervalCapacity<double> other(1, 2.0, {0, 1, 2});
  using Piece = LevelPiece<double>;
  EXPECT_EQ(code_of([&] { LevelDependentCapacity<double>(std::nullopt, {}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { LevelDependentCapacity<double>(std::nullopt, {Piece{std::nullopt, mu}, Piece{1.0, mu}}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { LevelDependentCapacity<double>(std::nullopt, {Piece{2.0, mu}, Piece{1.0, mu}}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { LevelDependentCapacity<double>(3.0, {Piece{2.0, mu}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { LevelDependentCapacity<double>(std::nullopt, {Piece{1.0, mu}, Piece{std::nullopt, other}}); }),
            ErrorCode::SizeMismatch);

  const LevelDependentCapacity<double> bounded(0.0, {Piece{1.0, mu}, Piece{5.0, mu}});
  EXPECT_EQ(code_of([&] { rci_level_dependent(IntervalVector<double>{{-1.0, 2.0}}, bounded); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([&] { rci_level_dependent(IntervalVector<double>{{1.0, 6.0}}, bounded); }), ErrorCode::OutOfDomain);
  EXPECT_DOUBLE_EQ(rci_level_dependent(IntervalVector<double>{{0.0, 5.0}}, bounded), 2.5);
}

// ---------------------------------------------------------------------------
// Concave

TEST(ConcaveTest, DominatesTheRobustChoquetIntegralWithExactCertificate) {
  Rng rng(521);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const auto mu = testing::random_interval_capacity<Rational>(rng, n);
    const auto x = testing::random_interval_vector<Rational>(rng, n, 0, 40);
    const auto result = concave_robust(x, mu);
    EXPECT_GE(result.value, rci(x, mu));
    const auto back = recompose(result.certificate);
    EXPECT_EQ(back.flattened(), x.flattened());
    EXPECT_EQ(decomposition_value(result.certificate, mu), result.value);
  }
}

TEST(ConcaveTest, IndicatorIsAFeasibleDecomposition) {
  Rng rng(522);
  const auto mu = testing::random_interval_capacity<Rational>(rng, 3);
  for (const auto& p : enumerate_q(3)) {
    EXPECT_GE(concave_robust(indicator<Rational>(p), mu).value, mu(p) / mu.top());
  }
}

TEST(ConcaveTest, AdditiveSureCapacityGivesTheWeightedSum) {
  Rng rng(523);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.push_back(testing::uniform_int(rng, 1, 5));
    Rational total = 0;
    for (const auto& v : w) total += v;
    for (auto& v : w) v /= total;
    const auto nu = Capacity<Rational>::additive(w);
    const auto other = testing::random_capacity_scaled(rng, n, 1);
    const auto mu = separable_from(SeparableDecomposition<Rational>(1, nu, other));
    const auto x = testing::random_degenerate_vector<Rational>(rng, n, 0, 40);
    Rational weighted = 0;
    for (int i = 0; i < n; ++i) weighted += w[static_cast<std::size_t>(i)] * x[i].lo;
    const auto value = concave_robust(x, mu).value;
    EXPECT_EQ(value, weighted);

    // Independent program over subsets: max Σ α_A ν(A) with Σ_{A∋i} α_A = x_i.
    RationalLP lp;
    lp.constraints.assign(static_cast<std::size_t>(n), {});
    for (CriterionSet::Bits a = 1; a < (1U << n); ++a) {
      lp.objective.push_back(nu.at_bits(a));
      for (int i = 0; i < n; ++i) lp.constraints[static_cast<std::size_t>(i)].push_back(((a >> i) & 1U) ? 1 : 0);
    }
    for (int i = 0; i < n; ++i) lp.rhs.push_back(x[i].lo);
    EXPECT_EQ(testing::lp_vertex_oracle(lp), value);
  }
}

TEST(ConcaveTest, FloatModeAgreesAndErrors) {
  Rng rng(524);
  const auto mu = testing::random_interval_capacity<double>(rng, 3);
  const auto exact = IntervalCapacity<Rational>(3, Rational(mu.top()), testing::to_scalars<Rational>(
      std::vector<long long>(mu.values().begin(), mu.values().end())));
  const auto x = testing::random_interval_vector<double>(rng, 3, 0, 40);
  std::vector<Interval<Rational>> items;
  for (const auto& it : x.items()) items.push_back({rational_from_double(it.lo), rational_from_double(it.hi)});
  EXPECT_NEAR(concave_robust(x, mu).value, to_double(concave_robust(IntervalVector<Rational>(items), exact).value),
              1e-9);
  EXPECT_EQ(code_of([&] { concave_robust(IntervalVector<double>{{-1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}}, mu); }),
            ErrorCode::NegativeInput);
  std::vector<Rational> big(pow3(9), Rational(0));
  big.back() = 1;
  const IntervalCapacity<Rational> large(9, 1, big);
  EXPECT_EQ(code_of([&] { concave_robust(IntervalVector<Rational>::constant(9, 1), large); }),
            ErrorCode::TooManyCriteria);
}

// ---------------------------------------------------------------------------
// m-point

TEST(MPointTest, TwoPointsIsTheRobustChoquetIntegral) {
  Rng rng(531);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto mu = testing::random_interval_capacity<Rational>(rng, n);
    const MPointCapacity<Rational> mp(n, 2, mu.top(), std::vector<Rational>(mu.values().begin(), mu.values().end()));
    const auto x = testing::random_interval_vector<Rational>(rng, n);
    std::vector<std::vector<Rational>> rows;
    for (const auto& it : x.items()) rows.push_back({it.lo, it.hi});
    EXPECT_EQ(mpoint_rci(MPointVector<Rational>(rows), mp), rci(x, mu));
  }
}

TEST(MPointTest, OnePointIsTheChoquetIntegral) {
  Rng rng(532);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const auto nu = testing::random_capacity<Rational>(rng, n);
    const MPointCapacity<Rational> mp(n, 1, nu.top(), std::vector<Rational>(nu.values().begin(), nu.values().end()));
    const auto pts = testing::random_degenerate_vector<Rational>(rng, n).lower();
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : pts) rows.push_back({p});
    EXPECT_EQ(mpoint_rci(MPointVector<Rational>(rows), mp), choquet<Rational>(pts, nu));
  }
}

TEST(MPointTest, ThreePointsConstantsAndHandExample) {
  Rng rng(533);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const auto values = testing::random_monotone_table(rng, ChainProduct(n, 4));
    const MPointCapacity<Rational> mp(n, 3, values.back(), testing::to_scalars<Rational>(values));
    const Rational k = testing::random_eighth<Rational>(rng, -40, 40);
    const MPointVector<Rational> x(std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), {k, k, k}));
    EXPECT_EQ(mpoint_rci(x, mp), k);
  }
  // One criterion at (1, 2, 4) with μ = 0, 1, 2, 4 by chain depth.
  const MPointCapacity<Rational> mp(1, 3, 4, {0, 1, 2, 4});
  EXPECT_EQ(mpoint_rci(MPointVector<Rational>({{1, 2, 4}}), mp), 2);
}

TEST(MPointTest, ChainCodesAndErrors) {
  const auto s = [](std::initializer_list<int> m) { return CriterionSet::of(3, m); };
  const std::vector<CriterionSet> chain = {s({0}), s({0, 2}), s({0, 1, 2})};
  EXPECT_EQ(mpoint_chain(mpoint_code(chain), 3, 3), chain);
  EXPECT_EQ(code_of([&] { mpoint_code({s({0}), s({1})}); }), ErrorCode::NotNested);
  EXPECT_EQ(code_of([] { MPointVector<double>({{1.0, 0.5}}); }), ErrorCode::NotChainOrdered);
  EXPECT_EQ(code_of([] { MPointVector<double>({{1.0, 2.0}, {1.0}}); }), ErrorCode::WrongLength);
  EXPECT_EQ(code_of([] { MPointCapacity<double>(1, 3, 1.0, {0, 0.5, 0.4, 1}); }), ErrorCode::NotMonotone);
  EXPECT_EQ(code_of([] { MPointCapacity<double>(1, 3, 1.0, {0, 0.5, 0.6, 0.9}); }), ErrorCode::BadBoundary);
  // m = 2 codes coincide with pair codes.
  EXPECT_EQ(mpoint_code({s({1}), s({0, 1})}), q_index(testing::pair_of(3, {1}, {0, 1})).code);
}

}  // namespace
}  // namespace rcint
