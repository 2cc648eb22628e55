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

#ifndef TRICKTREE_ESTIMATOR_HPP_
#define TRICKTREE_ESTIMATOR_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tricktree/bigcount.hpp"
#include "tricktree/engine.hpp"
#include "tricktree/stats.hpp"

namespace tricktree {

// Per-trick follower branching statistics over many random playouts. For
// each game and trick, the followers' legal-move counts are summed (an
// integer between R-1 and (R-1)*K); dividing by R-1 at render time gives
// the per-trick average moves. Sums and squared sums are kept exactly so
// that merging shards never changes a digit.
struct BranchingProfile {
  int tricks = 0;
  int followers = 0;  // R - 1
  uint64_t games = 0;
  std::vector<uint64_t> follower_sum;     // per trick
  std::vector<uint64_t> follower_sum_sq;  // per trick, square of per-game sum

  BranchingProfile() = default;
  BranchingProfile(int tricks_, int followers_)
      : tricks(tricks_),
        followers(followers_),
        follower_sum(tricks_, 0),
        follower_sum_sq(tricks_, 0) {}

  void add_game(const std::vector<uint16_t>& degrees);
  void merge(const BranchingProfile& other);

  BigRatio exact_mean(int trick) const;  // trick is 0-based here
  double mean(int trick) const;
  double stderr_of_mean(int trick) const;

  bool operator==(const BranchingProfile&) const = default;
};

// Everything the tree-size experiment reports for one mode.
struct TreeSizeReport {
  std::string mode;  // "nt" or "trump"
  MomentAccumulator acc;
};

// Exact product of the branching degrees recorded along one complete
// playout. Unbiased for the leaf count of the play tree the playout walked.
BigCount knuth_estimate(const PlayoutTrace& trace, const GameParams& params);

// Runs n_games independent (deal, playout) pairs and accumulates the
// follower branching per trick. Deterministic in (master_seed, n_games,
// leader0) alone: each game derives its own RNG streams from master_seed
// and the game index, so the worker count never affects the result.
BranchingProfile branching_profile(const GameParams& params, uint64_t n_games, int leader0,
                                   uint64_t master_seed, int workers);

// Same sampling scheme, accumulating knuth_estimate per playout instead.
// playouts_per_deal > 1 replays the same deal with fresh random playouts.
TreeSizeReport estimate_tree_size(const GameParams& params, uint64_t n_games, int leader0,
                                  uint64_t master_seed, int workers, int playouts_per_deal = 1);

// Paired comparison: each game deals once, plays it out without trump, then
// replays the same deal with a trump suit and the identical opening lead.
// Trick-1 accumulators of the two profiles are therefore exactly equal.
// The trump suit is params.trump when set, suit 0 otherwise. Returns
// {no-trump profile, trump profile}.
std::pair<BranchingProfile, BranchingProfile> paired_trump_nt_profile(const GameParams& params,
                                                                      uint64_t n_games, int leader0,
                                                                      uint64_t master_seed,
                                                                      int workers);

}  // namespace tricktree

#endif  // TRICKTREE_ESTIMATOR_HPP_
