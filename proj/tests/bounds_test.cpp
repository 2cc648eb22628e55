// Copyright 2026 The tricktree Authors
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

#include "tricktree/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "tricktree/deal_io.hpp"
#include "tricktree/error.hpp"

namespace tricktree {
namespace {

const GameParams kBridge = bridge_params();

TEST(HoldingCountBound, PinnedValues) {
  EXPECT_EQ(holding_count_bound(kBridge, 0), 1);
  EXPECT_EQ(holding_count_bound(kBridge, 1), 371293);
  EXPECT_EQ(holding_count_bound(kBridge, 2), 2109858192LL);
  EXPECT_EQ(holding_count_bound(kBridge, 7), 13847585336462592LL);
  EXPECT_EQ(holding_count_bound(kBridge, 13), 9517);
  EXPECT_EQ(holding_count_bound(make_params(2, 1, 1, 2), 1), 3);
}

TEST(HoldingCountBound, RejectsOutOfRangeK) {
  EXPECT_THROW(holding_count_bound(kBridge, -1), Error);
  EXPECT_THROW(holding_count_bound(kBridge, 14), Error);
}

TEST(HoldingCountBound, DominatesTheChooseTerm) {
  for (int k = 0; k <= 13; ++k) {
    EXPECT_GE(holding_count_bound(kBridge, k), ipow(binomial(13, k), 4))
        << "k=" << k;
  }
}

TEST(PositionCountBound, PinnedValues) {
  EXPECT_EQ(position_count_bound(kBridge, 0), 14);
  EXPECT_EQ(position_count_bound(kBridge, 1), 4826809);
  EXPECT_EQ(position_count_bound(kBridge, 2), 25318298304LL);
  EXPECT_EQ(position_count_bound(kBridge, 7), 96933097355238144LL);
  EXPECT_EQ(position_count_bound(kBridge, 13), holding_count_bound(kBridge, 13));
}

TEST(StateSpaceUpperBound, BridgeTotals) {
  const BigCount scoreless = state_space_upper_bound(kBridge, false);
  const BigCount scored = state_space_upper_bound(kBridge, true);
  EXPECT_EQ(scoreless, 31895677409359064LL);
  EXPECT_EQ(scored, 227688224788008012LL);
  EXPECT_EQ(to_sci(scoreless, 1), "3e16");
  EXPECT_EQ(to_sci(scored, 1), "2e17");
}

TEST(StateSpaceUpperBound, TinyFamily) {
  const GameParams p = make_params(2, 1, 1, 2);
  EXPECT_EQ(state_space_upper_bound(p, false), 4);  // 1 + 3
  EXPECT_EQ(state_space_upper_bound(p, true), 5);   // 2 + 3
}

TEST(TreeSizeBounds, Bridge) {
  const BigCount upper = tree_size_upper_bound(kBridge);
  EXPECT_EQ(upper, BigCount("1503561738404723998944447273369600000000"));
  EXPECT_EQ(to_sci(upper, 2), "1.5e39");
  EXPECT_EQ(tree_size_weak_lower_bound(kBridge), 6227020800LL);
}

TEST(TreeSizeBounds, TinyFamilies) {
  EXPECT_EQ(tree_size_upper_bound(make_params(2, 2, 2, 2)), 4);
  EXPECT_EQ(tree_size_upper_bound(make_params(2, 1, 1, 2)), 1);
  EXPECT_EQ(tree_size_weak_lower_bound(make_params(2, 3, 2, 3)), 6);
}

Deal balanced_bridge_deal() {
  return parse_deal_bridge(
      "N:AKQJ.T98.765.432 E:T98.765.432.AKQJ "
      "S:765.432.AKQJ.T98 W:432.AKQJ.T98.765",
      kBridge);
}

TEST(FrankLowerBound, BalancedBridgeDeal) {
  const BigCount frank = frank_lower_bound(balanced_bridge_deal(), kBridge);
  EXPECT_EQ(frank, 722204136308736LL);
  EXPECT_EQ(frank, ipow(5184, 4));
  EXPECT_EQ(to_sci(frank, 2), "7.2e14");
}

TEST(FrankLowerBound, ExtremeShape) {
  ShapeTable shape(4, 4);
  // one hand holds a whole suit, the rest are balanced
  for (int s = 0; s < 4; ++s) shape.at(0, s) = s == 0 ? 13 : 0;
  for (int h = 1; h < 4; ++h)
    for (int s = 0; s < 4; ++s) shape.at(h, s) = s == 0 ? 0 : 4 + (s == h);
  shape.validate(kBridge);
  EXPECT_EQ(frank_lower_bound(shape, kBridge),
            factorial(13) * ipow(factorial(5) * factorial(4) * factorial(4), 3));
}

TEST(FrankLowerBound, NeverExceedsTreeUpperBound) {
  Xoshiro256 rng(61);
  for (int i = 0; i < 20; ++i) {
    const Deal deal = deal_random(kBridge, rng);
    EXPECT_LE(frank_lower_bound(deal, kBridge), tree_size_upper_bound(kBridge));
    EXPECT_GE(frank_lower_bound(deal, kBridge), 1);
  }
}

TEST(FrankLowerBound, BalancedShapeMinimizes) {
  // R=2, K=3, NS=2: hand 0 takes a of suit 0, hand 1 the complement
  const GameParams p = make_params(2, 3, 2, 3);
  BigCount best;
  int best_a = -1;
  for (int a = 0; a <= 3; ++a) {
    ShapeTable shape(2, 2);
    shape.at(0, 0) = a;
    shape.at(0, 1) = 3 - a;
    shape.at(1, 0) = 3 - a;
    shape.at(1, 1) = a;
    shape.validate(p);
    const BigCount frank = frank_lower_bound(shape, p);
    if (best_a < 0 || frank < best) {
      best = frank;
      best_a = a;
    }
  }
  EXPECT_TRUE(best_a == 1 || best_a == 2);
  EXPECT_EQ(best, 4);  // (1! * 2!)^2
}

TEST(ShapeTable, ValidationCatchesBadSums) {
  // rows sum to K but both hands claim the whole of suit 0
  ShapeTable shape(2, 2);
  shape.at(0, 0) = 2;
  shape.at(1, 0) = 2;
  try {
    shape.validate(make_params(2, 2, 2, 2));
    FAIL() << "expected BadShape";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::bad_shape);
  }
}

TEST(ShapeTable, FromDealMatchesHoldings) {
  const Deal deal = balanced_bridge_deal();
  const ShapeTable shape = ShapeTable::from_deal(deal, kBridge);
  EXPECT_EQ(shape.at(0, 0), 4);
  EXPECT_EQ(shape.at(0, 1), 3);
  EXPECT_EQ(shape.at(3, 1), 4);
  shape.validate(kBridge);
}

TEST(ExpectedFrank, ClosedFormCases) {
  // K = 1: every hand holds one card, frank is always 1
  EXPECT_EQ(expected_frank_bound_exact(make_params(2, 1, 2, 1)), BigRatio(1));
  // single suit: frank is K!^R no matter the deal
  EXPECT_EQ(expected_frank_bound_exact(make_params(2, 2, 1, 4)), BigRatio(4));
  EXPECT_EQ(expected_frank_bound_exact(make_params(4, 3, 2, 6)),
            BigRatio(432, 7));
}

TEST(ExpectedFrank, BridgeExactValue) {
  const BigRatio e = expected_frank_bound_exact(kBridge);
  EXPECT_EQ(numerator(e),
            BigCount("2716433018575256576166920045199360000"));
  EXPECT_EQ(denominator(e), BigCount("2585956553861083771"));
  EXPECT_EQ(to_sci(e, 3), "1.05e18");
}

TEST(ExpectedFrank, ShapeCapTrips) {
  try {
    expected_frank_bound_exact(kBridge, 10);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::too_large);
    EXPECT_TRUE(e.is_guard());
  }
}

TEST(ExpectedFrankMc, DegenerateFamilies) {
  const GameParams p = make_params(2, 1, 2, 1);
  Xoshiro256 rng(9);
  const MomentAccumulator acc = expected_frank_bound_mc(p, 500, rng);
  EXPECT_EQ(acc.n, 500u);
  EXPECT_EQ(acc.mean(), BigRatio(1));
  EXPECT_EQ(acc.variance(), BigRatio(0));
  EXPECT_EQ(acc.min_v, 1);
  EXPECT_EQ(acc.max_v, 1);
}

TEST(ExpectedFrankMc, DeterministicPerSeed) {
  const GameParams p = make_params(4, 3, 2, 6);
  Xoshiro256 a(77), b(77);
  const MomentAccumulator x = expected_frank_bound_mc(p, 2000, a);
  const MomentAccumulator y = expected_frank_bound_mc(p, 2000, b);
  EXPECT_TRUE(x == y);
}

TEST(ExpectedFrankMc, AgreesWithExactValue) {
  const GameParams p = make_params(4, 3, 2, 6);
  const BigRatio exact = expected_frank_bound_exact(p);
  Xoshiro256 rng(4242);
  const MomentAccumulator acc = expected_frank_bound_mc(p, 20000, rng);
  const double z = to_double((acc.mean() - exact) / acc.stderr_of_mean());
  EXPECT_LT(std::abs(z), 4.0) << "z=" << z;
  EXPECT_GE(acc.min_v, 1);
  EXPECT_LE(acc.max_v, tree_size_upper_bound(p));
}

}  // namespace
}  // namespace tricktree
