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

#include "tricktree/estimator.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "tricktree/error.hpp"
#include "tricktree/rng.hpp"

namespace tricktree {
namespace {

// Sub-stream indices hung off (master_seed, game). Keeping the deal stream
// separate from the playout streams lets trump and no-trump runs replay the
// exact same deals.
enum Channel : uint64_t { kDealChannel = 0, kNoTrumpChannel = 1, kTrumpChannel = 2 };

Xoshiro256 game_stream(uint64_t master_seed, uint64_t game, uint64_t channel) {
  return Xoshiro256(stream_seed(master_seed, game * 4 + channel));
}

uint64_t playout_channel(const GameParams& params) {
  return params.trump ? kTrumpChannel : kNoTrumpChannel;
}

// Runs per_game(acc, g) for g in [0, n_games), sharded by stride across
// workers, then merges the per-worker accumulators in index order. Exact
// accumulators make the merge independent of the sharding.
template <typename Acc, typename PerGame>
Acc run_sharded(uint64_t n_games, int workers, const Acc& init, const PerGame& per_game) {
  if (workers < 1) workers = 1;
  if (uint64_t(workers) > n_games) workers = int(n_games ? n_games : 1);
  if (workers == 1) {
    Acc acc = init;
    for (uint64_t g = 0; g < n_games; ++g) per_game(acc, g);
    return acc;
  }
  std::vector<Acc> parts(workers, init);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (uint64_t g = w; g < n_games; g += uint64_t(workers)) per_game(parts[w], g);
    });
  }
  for (auto& t : threads) t.join();
  Acc acc = parts[0];
  for (int w = 1; w < workers; ++w) acc.merge(parts[w]);
  return acc;
}

}  // namespace

void BranchingProfile::add_game(const std::vector<uint16_t>& degrees) {
  int hands = followers + 1;
  for (int t = 0; t < tricks; ++t) {
    uint64_t a = 0;
    for (int i = 1; i < hands; ++i) a += degrees[size_t(t) * hands + i];
    follower_sum[t] += a;
    follower_sum_sq[t] += a * a;
  }
  ++games;
}

void BranchingProfile::merge(const BranchingProfile& other) {
  games += other.games;
  for (int t = 0; t < tricks; ++t) {
    follower_sum[t] += other.follower_sum[t];
    follower_sum_sq[t] += other.follower_sum_sq[t];
  }
}

BigRatio BranchingProfile::exact_mean(int trick) const {
  if (games == 0) return BigRatio(0);
  return BigRatio(BigCount(follower_sum[trick]), BigCount(games) * followers);
}

double BranchingProfile::mean(int trick) const { return to_double(exact_mean(trick)); }

double BranchingProfile::stderr_of_mean(int trick) const {
  if (games < 2) return 0.0;
  using u128 = unsigned __int128;
  u128 n = games;
  u128 var_num = n * u128(follower_sum_sq[trick]) - u128(follower_sum[trick]) * follower_sum[trick];
  double var = double(var_num) / (double(games) * double(games - 1));
  return std::sqrt(var / double(games)) / double(followers);
}

BigCount knuth_estimate(const PlayoutTrace& trace, const GameParams& params) {
  size_t expected = size_t(params.hands) * params.cards_per_hand;
  if (trace.degrees.size() != expected) {
    std::ostringstream os;
    os << "trace records " << trace.degrees.size() << " degrees, expected " << expected;
    fail(errc::incomplete_trace, os.str());
  }
  BigCount x = 1;
  uint64_t chunk = 1;
  for (uint16_t d : trace.degrees) {
    if (chunk > std::numeric_limits<uint64_t>::max() / d) {
      x *= chunk;
      chunk = 1;
    }
    chunk *= d;
  }
  x *= chunk;
  return x;
}

BranchingProfile branching_profile(const GameParams& params, uint64_t n_games, int leader0,
                                   uint64_t master_seed, int workers) {
  uint64_t channel = playout_channel(params);
  BranchingProfile init(params.cards_per_hand, params.hands - 1);
  return run_sharded(n_games, workers, init, [&](BranchingProfile& acc, uint64_t g) {
    Xoshiro256 deal_rng = game_stream(master_seed, g, kDealChannel);
    Deal deal = deal_random(params, deal_rng);
    Xoshiro256 play_rng = game_stream(master_seed, g, channel);
    PlayoutTrace trace = random_playout(deal, params, leader0, play_rng);
    acc.add_game(trace.degrees);
  });
}

TreeSizeReport estimate_tree_size(const GameParams& params, uint64_t n_games, int leader0,
                                  uint64_t master_seed, int workers, int playouts_per_deal) {
  if (playouts_per_deal < 1) playouts_per_deal = 1;
  uint64_t channel = playout_channel(params);
  MomentAccumulator acc = run_sharded(
      n_games, workers, MomentAccumulator{}, [&](MomentAccumulator& part, uint64_t g) {
        Xoshiro256 deal_rng = game_stream(master_seed, g, kDealChannel);
        Deal deal = deal_random(params, deal_rng);
        Xoshiro256 play_rng = game_stream(master_seed, g, channel);
        for (int p = 0; p < playouts_per_deal; ++p) {
          PlayoutTrace trace = random_playout(deal, params, leader0, play_rng);
          part.add(knuth_estimate(trace, params));
        }
      });
  return TreeSizeReport{params.trump ? "trump" : "nt", std::move(acc)};
}

std::pair<BranchingProfile, BranchingProfile> paired_trump_nt_profile(const GameParams& params,
                                                                      uint64_t n_games, int leader0,
                                                                      uint64_t master_seed,
                                                                      int workers) {
  GameParams nt = params;
  nt.trump.reset();
  GameParams tr = params;
  tr.trump = params.trump.value_or(0);

  struct PairAcc {
    BranchingProfile nt;
    BranchingProfile tr;
    void merge(const PairAcc& other) {
      nt.merge(other.nt);
      tr.merge(other.tr);
    }
  };
  PairAcc init{BranchingProfile(params.cards_per_hand, params.hands - 1),
               BranchingProfile(params.cards_per_hand, params.hands - 1)};
  PairAcc acc = run_sharded(n_games, workers, init, [&](PairAcc& part, uint64_t g) {
    Xoshiro256 deal_rng = game_stream(master_seed, g, kDealChannel);
    Deal deal = deal_random(nt, deal_rng);
    Xoshiro256 nt_rng = game_stream(master_seed, g, kNoTrumpChannel);
    PlayoutTrace nt_trace = random_playout(deal, nt, leader0, nt_rng);
    part.nt.add_game(nt_trace.degrees);
    Xoshiro256 tr_rng = game_stream(master_seed, g, kTrumpChannel);
    PlayoutTrace tr_trace =
        random_playout_forced_lead(deal, tr, leader0, tr_rng, nt_trace.moves.front());
    part.tr.add_game(tr_trace.degrees);
  });
  return {std::move(acc.nt), std::move(acc.tr)};
}

}  // namespace tricktree
