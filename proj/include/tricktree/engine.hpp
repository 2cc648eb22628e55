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

#ifndef TRICKTREE_ENGINE_HPP_
#define TRICKTREE_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tricktree/error.hpp"
#include "tricktree/rng.hpp"

namespace tricktree {

// A parametric family of perfect-information trick-taking games: R hands of
// K cards each, drawn from a deck of NS suits times NR ranks. Standard
// contract-bridge play is (R=4, K=13, NS=4, NR=13).
struct GameParams {
  int hands = 0;           // R
  int cards_per_hand = 0;  // K
  int num_suits = 0;       // NS
  int ranks_per_suit = 0;  // NR
  std::optional<int> trump;

  int deck_size() const { return hands * cards_per_hand; }

  bool operator==(const GameParams&) const = default;
};

// Validates counts: positive sizes, NS*NR == R*K, trump < NS. Rank indices
// are limited to 64 per suit so a suit fits one machine word.
GameParams make_params(int hands, int cards_per_hand, int num_suits,
                       int ranks_per_suit,
                       std::optional<int> trump = std::nullopt);

GameParams bridge_params(std::optional<int> trump = std::nullopt);

struct Card {
  uint8_t suit = 0;
  uint8_t rank = 0;  // higher rank index beats lower

  bool operator==(const Card&) const = default;
};

// Canonical card order used everywhere moves or decks are sequenced:
// ascending suit, descending rank within a suit.
inline bool canonical_less(Card a, Card b) {
  if (a.suit != b.suit) return a.suit < b.suit;
  return a.rank > b.rank;
}

// One hand as per-suit rank bitmasks.
struct Hand {
  std::vector<uint64_t> suits;

  explicit Hand(int num_suits = 0) : suits(num_suits, 0) {}

  bool contains(Card c) const {
    return (suits[c.suit] >> c.rank) & 1;
  }
  void insert(Card c) { suits[c.suit] |= uint64_t{1} << c.rank; }
  void erase(Card c) { suits[c.suit] &= ~(uint64_t{1} << c.rank); }
  int size() const;
  bool empty() const;
  std::vector<Card> cards() const;  // canonical order

  bool operator==(const Hand&) const = default;
};

struct Deal {
  std::vector<Hand> hands;

  bool operator==(const Deal&) const = default;
};

// The full deck in canonical order.
std::vector<Card> full_deck(const GameParams& params);

// Uniformly random deal: one uniform permutation of the deck, split into R
// consecutive K-card blocks.
Deal deal_random(const GameParams& params, Xoshiro256& rng);

struct TrickPlay {
  int hand = 0;
  Card card;

  bool operator==(const TrickPlay&) const = default;
};

// A position: remaining hands, the trick under construction, and the tricks
// already banked by each side (side of hand h is h mod 2). `params` is a
// non-owning pointer; the GameParams must outlive the state.
struct PlayState {
  const GameParams* params = nullptr;
  std::vector<Hand> remaining;
  std::vector<TrickPlay> trick;  // empty between tricks
  int leader = 0;                // leader of the current trick
  int to_move = 0;               // == (leader + trick.size()) mod R
  std::array<int, 2> side_tricks = {0, 0};

  bool terminal() const;
  int cards_remaining() const;
};

PlayState initial_state(const Deal& deal, const GameParams& params,
                        int leader0 = 0);

// Successor moves in canonical order: the leader may play anything; a
// follower must follow the led suit, or play anything when void in it.
// Throws TerminalState on finished positions. Never empty otherwise.
std::vector<Card> legal_moves(const PlayState& state);

// Number of legal moves without materializing them.
int legal_move_count(const PlayState& state);

// Applies one card: removes it from the hand, appends it to the trick, and
// on the R-th card resolves the trick (winner leads next, side score bumped,
// trick cleared). Throws IllegalMove if the card is not currently legal.
PlayState apply_move(const PlayState& state, Card card);

// Winner of a complete trick: highest trump if any trump was played,
// otherwise highest card of the led suit. `trick` holds the R cards in play
// order; `leader` is the hand that played trick[0]. Throws IncompleteTrick.
int trick_winner(std::span<const Card> trick, int leader,
                 const GameParams& params);

// One full random play of a deal: R*K moves, each drawn uniformly from the
// legal moves, with the branching degree recorded before every move.
struct PlayoutTrace {
  std::vector<Card> moves;
  std::vector<uint16_t> degrees;
};

PlayoutTrace random_playout(const Deal& deal, const GameParams& params,
                            int leader0, Xoshiro256& rng);

// Same, but with the first move pinned. Used for paired trump/no-trump
// experiments that must share the opening lead.
PlayoutTrace random_playout_forced_lead(const Deal& deal,
                                        const GameParams& params, int leader0,
                                        Xoshiro256& rng,
                                        std::optional<Card> forced_first);

}  // namespace tricktree

#endif  // TRICKTREE_ENGINE_HPP_
