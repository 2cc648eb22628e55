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

#include "tricktree/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "tricktree/bounds.hpp"
#include "tricktree/error.hpp"

namespace tricktree {
namespace {

TEST(ForEachDeal, VisitsEveryOrderedDeal) {
  int count = 0;
  for_each_deal(make_params(2, 1, 1, 2), [&](const Deal&) { ++count; });
  EXPECT_EQ(count, 2);

  count = 0;
  for_each_deal(make_params(2, 2, 2, 2), [&](const Deal& deal) {
    ++count;
    ASSERT_EQ(deal.hands.size(), 2u);
    EXPECT_EQ(deal.hands[0].size(), 2);
    EXPECT_EQ(deal.hands[1].size(), 2);
  });
  EXPECT_EQ(count, 6);  // C(4,2)

  count = 0;
  for_each_deal(make_params(4, 2, 1, 8), [&](const Deal&) { ++count; });
  EXPECT_EQ(count, 2520);  // C(8,2) * C(6,2) * C(4,2)
}

TEST(CountLeaves, SingleSuitFamiliesAreExact) {
  const GameParams p = make_params(2, 3, 1, 6);
  for_each_deal(p, [&](const Deal& deal) {
    EXPECT_EQ(count_leaves(deal, p), 36);  // (3!)^2
  });
}

TEST(CountLeaves, SandwichedByTheClosedForms) {
  for (const GameParams& p :
       {make_params(2, 2, 2, 2), make_params(2, 3, 2, 3),
        make_params(2, 3, 3, 2), make_params(4, 2, 2, 4)}) {
    const BigCount upper = tree_size_upper_bound(p);
    for_each_deal(p, [&](const Deal& deal) {
      const BigCount leaves = count_leaves(deal, p);
      EXPECT_GE(leaves, frank_lower_bound(deal, p));
      EXPECT_LE(leaves, upper);
    });
  }
}

TEST(CountLeaves, TrumpDoesNotChangeLeafCounts) {
  // legality never consults the trump suit, only trick winners move
  const GameParams nt = make_params(2, 3, 2, 3);
  const GameParams tr = make_params(2, 3, 2, 3, 1);
  for_each_deal(nt, [&](const Deal& deal) {
    EXPECT_EQ(count_leaves(deal, nt), count_leaves(deal, tr));
  });
}

TEST(CountLeaves, GuardTripsBeforeEnumerating) {
  const GameParams bridge = bridge_params();
  Xoshiro256 rng(1);
  const Deal deal = deal_random(bridge, rng);
  try {
    count_leaves(deal, bridge);
    FAIL() << "expected GuardExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::guard_exceeded);
    EXPECT_TRUE(e.is_guard());
  }

  EnumerationGuard tight;
  tight.max_leaves = 0;
  const GameParams tiny = make_params(2, 1, 1, 2);
  Deal d;
  d.hands.assign(2, Hand(1));
  d.hands[0].insert({0, 0});
  d.hands[1].insert({0, 1});
  EXPECT_THROW(count_leaves(d, tiny, 0, tight), Error);
  tight.max_leaves = 1;
  EXPECT_EQ(count_leaves(d, tiny, 0, tight), 1);
}

struct StateCase {
  int hands, cards, suits, ranks;
  uint64_t scoreless, scored;
};

TEST(CountReachableStates, FrozenFamilyCounts) {
  const StateCase cases[] = {
      {2, 1, 1, 2, 3, 4},      {2, 1, 2, 1, 3, 3},
      {2, 2, 1, 4, 16, 22},    {2, 2, 2, 2, 14, 18},
      {2, 2, 4, 1, 12, 12},    {2, 3, 1, 6, 77, 125},
      {2, 3, 2, 3, 71, 110},   {2, 3, 3, 2, 69, 107},
      {2, 3, 6, 1, 50, 50},    {4, 2, 1, 8, 224, 242},
      {4, 2, 2, 4, 224, 242},  {4, 2, 4, 2, 224, 242},
      {4, 2, 8, 1, 80, 80},
  };
  for (const StateCase& c : cases) {
    const GameParams p = make_params(c.hands, c.cards, c.suits, c.ranks);
    EXPECT_EQ(count_reachable_states(p, false), c.scoreless)
        << c.hands << "," << c.cards << "," << c.suits << "," << c.ranks;
    EXPECT_EQ(count_reachable_states(p, true), c.scored)
        << c.hands << "," << c.cards << "," << c.suits << "," << c.ranks;
  }
}

TEST(CountReachableStates, ScoresOnlyAddStates) {
  for (const GameParams& p :
       {make_params(2, 2, 2, 2), make_params(2, 3, 2, 3),
        make_params(4, 2, 4, 2)}) {
    EXPECT_LE(count_reachable_states(p, false),
              count_reachable_states(p, true));
  }
}

TEST(CountReachableStates, StateGuardTrips) {
  EnumerationGuard tight;
  tight.max_states = 5;
  try {
    count_reachable_states(make_params(2, 2, 2, 2), false, tight);
    FAIL() << "expected GuardExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::guard_exceeded);
  }
}

TEST(CountReachableStates, LeafGuardCoversTheDealLoop) {
  EnumerationGuard tight;
  tight.max_leaves = 3;
  EXPECT_THROW(count_reachable_states(make_params(2, 2, 2, 2), false, tight),
               Error);
}

TEST(VerifyUnbiasedness, DegenerateGameIsExact) {
  const GameParams p = make_params(2, 1, 2, 1);
  Deal deal;
  deal.hands.assign(2, Hand(2));
  deal.hands[0].insert({0, 0});
  deal.hands[1].insert({1, 0});
  Xoshiro256 rng(5);
  const UnbiasednessReport report = verify_unbiasedness(deal, p, 50, rng);
  EXPECT_EQ(report.exact_leaves, 1);
  EXPECT_EQ(report.acc.mean(), BigRatio(1));
  EXPECT_EQ(report.z_score, 0.0);
  EXPECT_TRUE(report.passed());
}

TEST(VerifyUnbiasedness, SingleSuitIsZeroVariance) {
  const GameParams p = make_params(2, 3, 1, 6);
  Xoshiro256 rng(6);
  const Deal deal = deal_random(p, rng);
  const UnbiasednessReport report = verify_unbiasedness(deal, p, 100, rng);
  EXPECT_EQ(report.exact_leaves, 36);
  EXPECT_EQ(report.acc.variance(), BigRatio(0));
  EXPECT_TRUE(report.passed());
}

TEST(VerifyUnbiasedness, MidSizeFamilyAgrees) {
  const GameParams p = make_params(4, 3, 2, 6);
  Xoshiro256 deal_rng(7);
  const Deal deal = deal_random(p, deal_rng);
  Xoshiro256 play_rng(8);
  const UnbiasednessReport report = verify_unbiasedness(deal, p, 20000, play_rng);
  EXPECT_GT(report.exact_leaves, 0);
  EXPECT_LT(std::abs(report.z_score), 4.0) << "z=" << report.z_score;
  EXPECT_LE(report.acc.max_v, tree_size_upper_bound(p));
  EXPECT_GE(report.acc.min_v, tree_size_weak_lower_bound(p));
}

}  // namespace
}  // namespace tricktree
