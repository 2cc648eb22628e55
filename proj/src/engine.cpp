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

#include "tricktree/engine.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tricktree {

namespace {

constexpr int kMaxRanks = 64;   // one machine word per suit
constexpr int kMaxDeck = 4096;  // sanity cap for the whole family

// Index of the j-th set bit counting from the most significant end (rank
// descending), j in [0, popcount).
int select_bit_desc(uint64_t mask, int j) {
  for (;;) {
    const int top = 63 - std::countl_zero(mask);
    if (j == 0) return top;
    mask &= ~(uint64_t{1} << top);
    --j;
  }
}

}  // namespace

GameParams make_params(int hands, int cards_per_hand, int num_suits,
                       int ranks_per_suit, std::optional<int> trump) {
  if (hands < 2 || cards_per_hand < 1 || num_suits < 1 || ranks_per_suit < 1) {
    fail(errc::deck_mismatch,
         "counts must be positive (hands >= 2, cards_per_hand >= 1, "
         "num_suits >= 1, ranks_per_suit >= 1)");
  }
  if (ranks_per_suit > kMaxRanks) {
    fail(errc::too_large, "ranks_per_suit > " + std::to_string(kMaxRanks) +
                              " is not supported");
  }
  const long long deck = 1LL * hands * cards_per_hand;
  if (deck > kMaxDeck) {
    fail(errc::too_large,
         "deck of " + std::to_string(deck) + " cards exceeds the cap of " +
             std::to_string(kMaxDeck));
  }
  if (1LL * num_suits * ranks_per_suit != deck) {
    fail(errc::deck_mismatch,
         "num_suits * ranks_per_suit = " +
             std::to_string(1LL * num_suits * ranks_per_suit) +
             " but hands * cards_per_hand = " + std::to_string(deck));
  }
  if (trump && (*trump < 0 || *trump >= num_suits)) {
    fail(errc::bad_trump, "trump suit " + std::to_string(*trump) +
                              " out of range [0, " + std::to_string(num_suits) +
                              ")");
  }
  return GameParams{hands, cards_per_hand, num_suits, ranks_per_suit, trump};
}

GameParams bridge_params(std::optional<int> trump) {
  return make_params(4, 13, 4, 13, trump);
}

int Hand::size() const {
  int n = 0;
  for (uint64_t m : suits) n += std::popcount(m);
  return n;
}

bool Hand::empty() const {
  for (uint64_t m : suits)
    if (m) return false;
  return true;
}

std::vector<Card> Hand::cards() const {
  std::vector<Card> out;
  out.reserve(size());
  for (size_t s = 0; s < suits.size(); ++s) {
    uint64_t m = suits[s];
    while (m) {
      const int r = 63 - std::countl_zero(m);
      out.push_back(Card{static_cast<uint8_t>(s), static_cast<uint8_t>(r)});
      m &= ~(uint64_t{1} << r);
    }
  }
  return out;
}

std::vector<Card> full_deck(const GameParams& params) {
  std::vector<Card> deck;
  deck.reserve(params.deck_size());
  for (int s = 0; s < params.num_suits; ++s)
    for (int r = params.ranks_per_suit - 1; r >= 0; --r)
      deck.push_back(Card{static_cast<uint8_t>(s), static_cast<uint8_t>(r)});
  return deck;
}

Deal deal_random(const GameParams& params, Xoshiro256& rng) {
  std::vector<Card> deck = full_deck(params);
  shuffle(deck.data(), deck.size(), rng);
  Deal deal;
  deal.hands.assign(params.hands, Hand(params.num_suits));
  int i = 0;
  for (int h = 0; h < params.hands; ++h)
    for (int k = 0; k < params.cards_per_hand; ++k)
      deal.hands[h].insert(deck[i++]);
  return deal;
}

bool PlayState::terminal() const {
  for (const Hand& h : remaining)
    if (!h.empty()) return false;
  return trick.empty();
}

int PlayState::cards_remaining() const {
  int n = 0;
  for (const Hand& h : remaining) n += h.size();
  return n;
}

PlayState initial_state(const Deal& deal, const GameParams& params,
                        int leader0) {
  PlayState s;
  s.params = &params;
  s.remaining = deal.hands;
  s.leader = leader0;
  s.to_move = leader0;
  return s;
}

namespace {

// Mask of the to-move hand's candidate cards in the led suit, or 0 when it
// must discard; `whole_hand` reports whether every remaining card is legal.
uint64_t follow_mask(const PlayState& state, bool* whole_hand) {
  const Hand& hand = state.remaining[state.to_move];
  if (state.trick.empty()) {
    *whole_hand = true;
    return 0;
  }
  const uint64_t led = hand.suits[state.trick.front().card.suit];
  *whole_hand = led == 0;
  return led;
}

}  // namespace

std::vector<Card> legal_moves(const PlayState& state) {
  if (state.terminal()) fail(errc::terminal_state, "no moves in a finished game");
  bool whole_hand = false;
  const uint64_t led = follow_mask(state, &whole_hand);
  if (whole_hand) return state.remaining[state.to_move].cards();
  const auto suit = state.trick.front().card.suit;
  std::vector<Card> out;
  out.reserve(std::popcount(led));
  uint64_t m = led;
  while (m) {
    const int r = 63 - std::countl_zero(m);
    out.push_back(Card{suit, static_cast<uint8_t>(r)});
    m &= ~(uint64_t{1} << r);
  }
  return out;
}

int legal_move_count(const PlayState& state) {
  if (state.terminal()) fail(errc::terminal_state, "no moves in a finished game");
  bool whole_hand = false;
  const uint64_t led = follow_mask(state, &whole_hand);
  if (whole_hand) return state.remaining[state.to_move].size();
  return std::popcount(led);
}

int trick_winner(std::span<const Card> trick, int leader,
                 const GameParams& params) {
  if (static_cast<int>(trick.size()) != params.hands) {
    fail(errc::incomplete_trick,
         "trick has " + std::to_string(trick.size()) + " cards, expected " +
             std::to_string(params.hands));
  }
  const int led_suit = trick.front().suit;
  int best = 0;
  for (int i = 1; i < params.hands; ++i) {
    const Card c = trick[i];
    const Card w = trick[best];
    bool wins;
    if (params.trump && (c.suit == *params.trump || w.suit == *params.trump)) {
      if (c.suit != w.suit) {
        wins = c.suit == *params.trump;
      } else {
        wins = c.rank > w.rank;
      }
    } else if (c.suit == w.suit) {
      wins = c.rank > w.rank;
    } else {
      wins = c.suit == led_suit;  // w off-suit can only happen untrumped
    }
    if (wins) best = i;
  }
  return (leader + best) % params.hands;
}

PlayState apply_move(const PlayState& state, Card card) {
  if (state.terminal()) fail(errc::terminal_state, "no moves in a finished game");
  bool whole_hand = false;
  const uint64_t led = follow_mask(state, &whole_hand);
  const Hand& hand = state.remaining[state.to_move];
  const bool legal = whole_hand ? hand.contains(card)
                                : card.suit == state.trick.front().card.suit &&
                                      ((led >> card.rank) & 1);
  if (!legal) {
    fail(errc::illegal_move, "card (suit " + std::to_string(card.suit) +
                                 ", rank " + std::to_string(card.rank) +
                                 ") is not a legal move");
  }

  PlayState next = state;
  next.remaining[state.to_move].erase(card);
  next.trick.push_back(TrickPlay{state.to_move, card});
  const int R = state.params->hands;
  if (static_cast<int>(next.trick.size()) == R) {
    std::vector<Card> cards;
    cards.reserve(R);
    for (const TrickPlay& p : next.trick) cards.push_back(p.card);
    const int winner = trick_winner(cards, next.trick.front().hand,
                                    *state.params);
    next.side_tricks[winner % 2] += 1;
    next.trick.clear();
    next.leader = winner;
    next.to_move = winner;
  } else {
    next.to_move = (next.trick.front().hand +
                    static_cast<int>(next.trick.size())) %
                   R;
  }
  return next;
}

namespace {

// Playout hot loop on raw masks; must agree move-for-move with
// legal_moves/apply_move (property-tested by replay).
PlayoutTrace run_playout(const Deal& deal, const GameParams& params,
                         int leader0, Xoshiro256& rng,
                         std::optional<Card> forced_first) {
  const int R = params.hands;
  const int NS = params.num_suits;
  const int total = params.deck_size();

  // flat copy of the hands' suit masks
  std::vector<uint64_t> hands(static_cast<size_t>(R) * NS);
  std::vector<int> hand_sizes(R);
  for (int h = 0; h < R; ++h) {
    for (int s = 0; s < NS; ++s)
      hands[static_cast<size_t>(h) * NS + s] = deal.hands[h].suits[s];
    hand_sizes[h] = deal.hands[h].size();
  }

  PlayoutTrace trace;
  trace.moves.reserve(total);
  trace.degrees.reserve(total);

  const int trump = params.trump ? *params.trump : -1;
  int leader = leader0;
  int played = 0;
  while (played < total) {
    int led_suit = -1;
    int win_pos = 0;
    Card win_card{};
    for (int pos = 0; pos < R; ++pos) {
      const int mover = (leader + pos) % R;
      uint64_t* suits = &hands[static_cast<size_t>(mover) * NS];

      Card pick{};
      int degree;
      if (pos > 0 && suits[led_suit] != 0) {
        const uint64_t mask = suits[led_suit];
        degree = std::popcount(mask);
        if (played == 0 && forced_first) {
          pick = *forced_first;
        } else {
          const int j = static_cast<int>(rng.uniform_below(degree));
          pick = Card{static_cast<uint8_t>(led_suit),
                      static_cast<uint8_t>(select_bit_desc(mask, j))};
        }
      } else {
        degree = hand_sizes[mover];
        if (played == 0 && forced_first) {
          pick = *forced_first;
        } else {
          int j = static_cast<int>(rng.uniform_below(degree));
          int s = 0;
          for (;; ++s) {
            const int c = std::popcount(suits[s]);
            if (j < c) break;
            j -= c;
          }
          pick = Card{static_cast<uint8_t>(s),
                      static_cast<uint8_t>(select_bit_desc(suits[s], j))};
        }
      }

      suits[pick.suit] &= ~(uint64_t{1} << pick.rank);
      --hand_sizes[mover];
      trace.moves.push_back(pick);
      trace.degrees.push_back(static_cast<uint16_t>(degree));
      ++played;

      if (pos == 0) {
        led_suit = pick.suit;
        win_pos = 0;
        win_card = pick;
      } else {
        bool wins;
        if (trump >= 0 &&
            (pick.suit == trump || win_card.suit == trump)) {
          wins = pick.suit != win_card.suit ? pick.suit == trump
                                            : pick.rank > win_card.rank;
        } else if (pick.suit == win_card.suit) {
          wins = pick.rank > win_card.rank;
        } else {
          wins = pick.suit == led_suit;
        }
        if (wins) {
          win_pos = pos;
          win_card = pick;
        }
      }
    }
    leader = (leader + win_pos) % R;
  }
  return trace;
}

}  // namespace

PlayoutTrace random_playout(const Deal& deal, const GameParams& params,
                            int leader0, Xoshiro256& rng) {
  return run_playout(deal, params, leader0, rng, std::nullopt);
}

PlayoutTrace random_playout_forced_lead(const Deal& deal,
                                        const GameParams& params, int leader0,
                                        Xoshiro256& rng,
                                        std::optional<Card> forced_first) {
  return run_playout(deal, params, leader0, rng, forced_first);
}

}  // namespace tricktree
