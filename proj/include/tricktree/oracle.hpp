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

#ifndef TRICKTREE_ORACLE_HPP_
#define TRICKTREE_ORACLE_HPP_

#include <cstdint>
#include <functional>

#include "tricktree/bigcount.hpp"
#include "tricktree/engine.hpp"
#include "tricktree/rng.hpp"
#include "tricktree/stats.hpp"

namespace tricktree {

// Caps for the exhaustive enumerations. Exceeding either aborts with
// GuardExceeded before memory or runtime get out of hand.
struct EnumerationGuard {
  BigCount max_leaves = BigCount(100'000'000);
  uint64_t max_states = 10'000'000;
};

struct UnbiasednessReport {
  BigCount exact_leaves;
  MomentAccumulator acc;
  // (sample mean - exact) / stderr; zero-variance samples give 0 when the
  // mean is exact and +/-inf otherwise.
  double z_score = 0.0;

  bool passed(double z_limit = 3.0) const;
};

// Exact number of complete play sequences of one deal, by depth-first
// enumeration. Pre-checked against guard.max_leaves using the K!^R ceiling,
// so a call that would run too long fails fast instead.
BigCount count_leaves(const Deal& deal, const GameParams& params, int leader0 = 0,
                      const EnumerationGuard& guard = {});

// Calls fn with every ordered deal of the parametrization exactly once.
void for_each_deal(const GameParams& params, const std::function<void(const Deal&)>& fn);

// Number of distinct positions reachable from ANY initial deal of the
// family, under the counting abstraction the closed-form bounds use: a
// position is identified by each hand's set of remaining cards as slot
// indices into that hand's initial (canonically ordered) holding, plus the
// in-progress trick as lead hand and ordered played slots, plus the two
// side scores when include_scores is set. Tricks already resolved leave no
// other residue, which is exactly why the per-k bounds cap these counts.
uint64_t count_reachable_states(const GameParams& params, bool include_scores,
                                const EnumerationGuard& guard = {}, int leader0 = 0);

// Draws n_playouts uniform playouts of the deal, averages their degree
// products, and compares with the exact leaf count.
UnbiasednessReport verify_unbiasedness(const Deal& deal, const GameParams& params,
                                       uint64_t n_playouts, Xoshiro256& rng, int leader0 = 0,
                                       const EnumerationGuard& guard = {});

}  // namespace tricktree

#endif  // TRICKTREE_ORACLE_HPP_
