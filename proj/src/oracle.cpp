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

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <unordered_set>
#include <vector>

#include "tricktree/bounds.hpp"
#include "tricktree/error.hpp"
#include "tricktree/estimator.hpp"

namespace tricktree {
namespace {

// In-place DFS state for one deal: per-hand card lists in canonical order
// ("slots"), a bitmask of slots still held, and the trick in progress.
struct DealWalker {
  const GameParams& params;
  int leader0;
  std::vector<std::vector<Card>> slot_cards;  // [hand][slot]
  std::vector<uint32_t> held;                 // [hand], bit i = slot i still in hand

  struct TrickEntry {
    int slot;
    Card card;
  };
  std::vector<TrickEntry> trick;
  int lead = 0;
  int scores[2] = {0, 0};

  DealWalker(const Deal& deal, const GameParams& p, int leader0_) : params(p), leader0(leader0_) {
    slot_cards.resize(p.hands);
    held.resize(p.hands);
    for (int h = 0; h < p.hands; ++h) {
      slot_cards[h] = deal.hands[h].cards();  // already canonically ordered
      held[h] = (p.cards_per_hand >= 32) ? ~uint32_t(0) : ((uint32_t(1) << p.cards_per_hand) - 1);
    }
    lead = leader0;
    trick.reserve(p.hands);
  }

  int to_move() const { return (lead + int(trick.size())) % params.hands; }

  bool finished() const {
    for (uint32_t m : held) {
      if (m) return false;
    }
    return trick.empty();
  }

  // Slots the hand to move may legally play, in slot order.
  void legal_slots(std::vector<int>& out) const {
    out.clear();
    int h = to_move();
    uint32_t m = held[h];
    if (!trick.empty()) {
      int led = trick[0].card.suit;
      for (uint32_t x = m; x; x &= x - 1) {
        int slot = std::countr_zero(x);
        if (slot_cards[h][slot].suit == led) out.push_back(slot);
      }
      if (!out.empty()) return;
    }
    for (uint32_t x = m; x; x &= x - 1) out.push_back(std::countr_zero(x));
  }

  // Plays the slot; returns the trick winner when the trick resolved, else
  // -1. The caller must invert via unplay with the same values.
  int play(int slot) {
    int h = to_move();
    Card card = slot_cards[h][slot];
    held[h] &= ~(uint32_t(1) << slot);
    trick.push_back({slot, card});
    if (int(trick.size()) < params.hands) return -1;
    int winner_off = 0;
    Card best = trick[0].card;
    for (int i = 1; i < params.hands; ++i) {
      Card c = trick[i].card;
      bool wins;
      if (params.trump && (c.suit == *params.trump || best.suit == *params.trump)) {
        wins = c.suit == best.suit ? c.rank > best.rank : c.suit == *params.trump;
      } else if (c.suit == best.suit) {
        wins = c.rank > best.rank;
      } else {
        wins = false;  // best always holds the led suit here unless trumped
      }
      if (wins) {
        winner_off = i;
        best = c;
      }
    }
    int winner = (lead + winner_off) % params.hands;
    return winner;
  }

  struct Undo {
    int prev_lead;
    std::vector<TrickEntry> prev_trick;
  };

  // Completes a resolved trick: scores it and passes the lead.
  void resolve(int winner, Undo& undo) {
    undo.prev_lead = lead;
    undo.prev_trick = trick;
    scores[winner % 2]++;
    trick.clear();
    lead = winner;
  }

  void unresolve(int winner, const Undo& undo) {
    scores[winner % 2]--;
    lead = undo.prev_lead;
    trick = undo.prev_trick;
  }

  void unplay(int slot) {
    TrickEntry e = trick.back();
    trick.pop_back();
    int h = (lead + int(trick.size())) % params.hands;
    (void)e;
    held[h] |= uint32_t(1) << slot;
  }
};

template <typename Count>
Count count_leaves_dfs(DealWalker& w, std::vector<int>* scratch, size_t depth) {
  if (w.finished()) return 1;
  Count total = 0;
  std::vector<int>& slots = scratch[depth];
  w.legal_slots(slots);
  for (int slot : slots) {
    int winner = w.play(slot);
    if (winner >= 0) {
      DealWalker::Undo undo;
      w.resolve(winner, undo);
      total += count_leaves_dfs<Count>(w, scratch, depth + 1);
      w.unresolve(winner, undo);
    } else {
      total += count_leaves_dfs<Count>(w, scratch, depth + 1);
    }
    w.unplay(slot);
  }
  return total;
}

}  // namespace

bool UnbiasednessReport::passed(double z_limit) const { return std::abs(z_score) <= z_limit; }

BigCount count_leaves(const Deal& deal, const GameParams& params, int leader0,
                      const EnumerationGuard& guard) {
  BigCount ceiling = tree_size_upper_bound(params);
  if (ceiling > guard.max_leaves) {
    fail(errc::guard_exceeded, "worst-case leaf count " + to_sci(ceiling, 2) +
                                   " exceeds the enumeration cap " + to_sci(guard.max_leaves, 2));
  }
  DealWalker w(deal, params, leader0);
  size_t depth = size_t(params.hands) * params.cards_per_hand + 1;
  std::vector<std::vector<int>> scratch(depth);
  if (ceiling <= BigCount(std::numeric_limits<uint64_t>::max())) {
    return BigCount(count_leaves_dfs<uint64_t>(w, scratch.data(), 0));
  }
  return count_leaves_dfs<BigCount>(w, scratch.data(), 0);
}

void for_each_deal(const GameParams& params, const std::function<void(const Deal&)>& fn) {
  std::vector<Card> deck = full_deck(params);
  int n = int(deck.size());
  std::vector<int> owner(n, -1);
  Deal deal;
  deal.hands.assign(params.hands, Hand(params.num_suits));

  // Assign hands one at a time; within a hand, choose card indices in
  // increasing order so each K-subset appears once.
  auto rec = [&](auto&& self, int hand, int from, int picked) -> void {
    if (hand == params.hands) {
      fn(deal);
      return;
    }
    if (picked == params.cards_per_hand) {
      self(self, hand + 1, 0, 0);
      return;
    }
    int still_needed = params.cards_per_hand - picked;
    for (int i = from; i + still_needed <= n; ++i) {
      if (owner[i] >= 0) continue;
      owner[i] = hand;
      deal.hands[hand].insert(deck[i]);
      self(self, hand, i + 1, picked + 1);
      deal.hands[hand].erase(deck[i]);
      owner[i] = -1;
    }
  };
  rec(rec, 0, 0, 0);
}

namespace {

// Serialized canonical key of the current DealWalker position. The card
// identities never appear: only slot indices relative to each hand's
// initial holding, which is what makes positions from different deals of
// the family collide exactly when the bounds' accounting treats them as one.
void append_state_key(const DealWalker& w, bool include_scores, std::string& out) {
  out.clear();
  for (uint32_t m : w.held) {
    out.push_back(char(m & 0xff));
    out.push_back(char((m >> 8) & 0xff));
    out.push_back(char((m >> 16) & 0xff));
    out.push_back(char((m >> 24) & 0xff));
  }
  if (!w.trick.empty()) {
    out.push_back(char(1 + w.lead));
    for (const auto& e : w.trick) out.push_back(char(e.slot));
  }
  out.push_back(char(0));  // terminator keeps empty-trick keys distinct
  if (include_scores) {
    out.push_back(char(w.scores[0]));
    out.push_back(char(w.scores[1]));
  }
}

struct StateCensus {
  std::unordered_set<std::string> seen;
  const EnumerationGuard& guard;
  bool include_scores;
  BigCount leaves_walked = 0;
  uint64_t leaves_this_deal = 0;
  std::string key;

  void dfs(DealWalker& w, std::vector<std::vector<int>>& scratch, size_t depth) {
    append_state_key(w, include_scores, key);
    if (seen.insert(key).second && seen.size() > guard.max_states) {
      fail(errc::guard_exceeded, "distinct-state cap exceeded");
    }
    if (w.finished()) {
      ++leaves_this_deal;
      return;
    }
    std::vector<int>& slots = scratch[depth];
    w.legal_slots(slots);
    for (int slot : slots) {
      int winner = w.play(slot);
      if (winner >= 0) {
        DealWalker::Undo undo;
        w.resolve(winner, undo);
        dfs(w, scratch, depth + 1);
        w.unresolve(winner, undo);
      } else {
        dfs(w, scratch, depth + 1);
      }
      w.unplay(slot);
    }
  }
};

}  // namespace

uint64_t count_reachable_states(const GameParams& params, bool include_scores,
                                const EnumerationGuard& guard, int leader0) {
  if (params.cards_per_hand > 24 || params.hands > 120) {
    fail(errc::guard_exceeded, "family enumeration is only supported for small parametrizations");
  }
  // A single deal already walks up to K!^R leaves; bail out before touching
  // the first one if even that exceeds the budget.
  if (tree_size_upper_bound(params) > guard.max_leaves) {
    fail(errc::guard_exceeded, "worst-case per-deal leaf count exceeds the enumeration cap");
  }
  StateCensus census{{}, guard, include_scores};
  size_t depth = size_t(params.hands) * params.cards_per_hand + 1;
  std::vector<std::vector<int>> scratch(depth);
  for_each_deal(params, [&](const Deal& deal) {
    DealWalker w(deal, params, leader0);
    census.leaves_this_deal = 0;
    census.dfs(w, scratch, 0);
    census.leaves_walked += census.leaves_this_deal;
    if (census.leaves_walked > guard.max_leaves) {
      fail(errc::guard_exceeded, "family-wide leaf budget exceeded");
    }
  });
  return census.seen.size();
}

UnbiasednessReport verify_unbiasedness(const Deal& deal, const GameParams& params,
                                       uint64_t n_playouts, Xoshiro256& rng, int leader0,
                                       const EnumerationGuard& guard) {
  UnbiasednessReport report;
  report.exact_leaves = count_leaves(deal, params, leader0, guard);
  for (uint64_t i = 0; i < n_playouts; ++i) {
    PlayoutTrace trace = random_playout(deal, params, leader0, rng);
    report.acc.add(knuth_estimate(trace, params));
  }
  double se = report.acc.stderr_of_mean();
  BigRatio diff = report.acc.mean() - BigRatio(report.exact_leaves);
  if (se == 0.0) {
    report.z_score =
        (diff == 0) ? 0.0
                    : std::copysign(std::numeric_limits<double>::infinity(), to_double(diff));
  } else {
    report.z_score = to_double(diff) / se;
  }
  return report;
}

}  // namespace tricktree
