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

#ifndef TRICKTREE_BOUNDS_HPP_
#define TRICKTREE_BOUNDS_HPP_

#include <cstdint>
#include <vector>

#include "tricktree/bigcount.hpp"
#include "tricktree/engine.hpp"
#include "tricktree/rng.hpp"
#include "tricktree/stats.hpp"

namespace tricktree {

// Per-hand suit-length matrix of a deal: counts(r, s) is how many cards of
// suit s hand r holds. Valid tables have every row summing to K and every
// column summing to NR.
class ShapeTable {
 public:
  ShapeTable(int hands, int suits) : hands_(hands), suits_(suits), counts_(size_t(hands) * suits, 0) {}

  static ShapeTable from_deal(const Deal& deal, const GameParams& params);

  int hands() const { return hands_; }
  int suits() const { return suits_; }
  int& at(int hand, int suit) { return counts_[size_t(hand) * suits_ + suit]; }
  int at(int hand, int suit) const { return counts_[size_t(hand) * suits_ + suit]; }

  // Throws BadShape unless rows sum to K, columns sum to NR, entries >= 0.
  void validate(const GameParams& params) const;

 private:
  int hands_;
  int suits_;
  std::vector<int> counts_;
};

// Upper bound on the number of distinct holdings compatible with k cards
// left in each hand: C(K,k)^R * (1 + R * sum_{h=1}^{R-1} k^h), with the
// k = 0 case pinned to 1.
BigCount holding_count_bound(const GameParams& params, int k);

// Position variant of the bound above: (K - k + 1) * holding_count_bound(k),
// the extra factor ranging over how many tricks one side may have taken.
BigCount position_count_bound(const GameParams& params, int k);

// Sum over k of the per-k bounds: with_scores=true sums the position
// variant, false the holding variant.
BigCount state_space_upper_bound(const GameParams& params, bool with_scores);

// K!^R: play tree size when no hand is ever constrained by following suit.
BigCount tree_size_upper_bound(const GameParams& params);

// K!: the leader alone contributes a factor K! to every play tree.
BigCount tree_size_weak_lower_bound(const GameParams& params);

// Product over hands and suits of s(r,k)!, counting the play sequences in
// which every hand always follows suit. A lower bound on leaf count.
BigCount frank_lower_bound(const ShapeTable& shape, const GameParams& params);
BigCount frank_lower_bound(const Deal& deal, const GameParams& params);

inline constexpr uint64_t kDefaultMaxShapes = 50'000'000;

// Exact expectation of frank_lower_bound over uniformly random deals,
// computed by recursing over hands and enumerating each hand's suit-length
// shape against the suit counts still undealt. The weight of giving a hand
// s cards from a suit with m remaining is C(m,s)*s! (choose the ranks, then
// order them), so the recursion accumulates sum-over-deals of the Frank
// product; dividing by the multinomial deal count (RK)!/(K!)^R yields the
// expectation. Throws TooLarge after max_shapes enumerated hand shapes.
BigRatio expected_frank_bound_exact(const GameParams& params, uint64_t max_shapes = kDefaultMaxShapes);

// Monte Carlo cross-check of the expectation above: sample mean of
// frank_lower_bound over n_deals uniform deals drawn from rng.
MomentAccumulator expected_frank_bound_mc(const GameParams& params, uint64_t n_deals, Xoshiro256& rng);

}  // namespace tricktree

#endif  // TRICKTREE_BOUNDS_HPP_
