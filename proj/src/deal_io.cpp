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

#include "tricktree/deal_io.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tricktree/error.hpp"

namespace tricktree {
namespace {

constexpr char kRankChars[] = "23456789TJQKA";  // index == rank
constexpr char kHandChars[] = "NESW";           // index == hand

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail_here(const std::string& what) const {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << what << " at line " << line << ", column " << col;
    fail(errc::parse_error, os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

int rank_from_char(char c) {
  for (int r = 0; r < 13; ++r) {
    if (kRankChars[r] == c) return r;
  }
  return -1;
}

void require_bridge_params(const GameParams& params) {
  if (params.hands != 4 || params.num_suits != 4 || params.ranks_per_suit != 13 || params.cards_per_hand != 13) {
    fail(errc::parse_error, "bridge notation is only defined for 4 hands of 13 cards over 4 suits of 13 ranks");
  }
}

// Inserts into hand, rejecting duplicates across the whole deal.
void add_card(Deal& deal, std::vector<bool>& seen, int hand, Card card, const GameParams& params) {
  if (card.suit >= params.num_suits || card.rank >= params.ranks_per_suit) {
    std::ostringstream os;
    os << "card (" << int(card.suit) << "," << int(card.rank) << ") outside " << int(params.num_suits)
       << " suits x " << int(params.ranks_per_suit) << " ranks";
    fail(errc::out_of_range, os.str());
  }
  size_t idx = size_t(card.suit) * params.ranks_per_suit + card.rank;
  if (seen[idx]) {
    std::ostringstream os;
    os << "card (" << int(card.suit) << "," << int(card.rank) << ") dealt twice";
    fail(errc::duplicate_card, os.str());
  }
  seen[idx] = true;
  deal.hands[hand].insert(card);
}

void check_hand_sizes(const Deal& deal, const GameParams& params) {
  for (int h = 0; h < params.hands; ++h) {
    if (int(deal.hands[h].size()) != params.cards_per_hand) {
      std::ostringstream os;
      os << "hand " << h << " holds " << deal.hands[h].size() << " cards, expected "
         << params.cards_per_hand;
      fail(errc::wrong_hand_size, os.str());
    }
  }
}

}  // namespace

std::string format_deal_bridge(const Deal& deal, const GameParams& params) {
  require_bridge_params(params);
  std::string out;
  for (int h = 0; h < 4; ++h) {
    if (h) out += ' ';
    out += kHandChars[h];
    out += ':';
    for (int s = 0; s < 4; ++s) {
      if (s) out += '.';
      for (int r = 12; r >= 0; --r) {
        if (deal.hands[h].contains({uint8_t(s), uint8_t(r)})) out += kRankChars[r];
      }
    }
  }
  return out;
}

Deal parse_deal_bridge(const std::string& text, const GameParams& params) {
  require_bridge_params(params);
  Deal deal;
  deal.hands.assign(4, Hand(params.num_suits));
  std::vector<bool> seen(params.deck_size(), false);
  std::array<bool, 4> have{};

  Cursor cur{text};
  for (int group = 0; group < 4; ++group) {
    cur.skip_ws();
    if (cur.done()) cur.fail_here("expected a hand label (one of N,E,S,W)");
    int hand = -1;
    for (int h = 0; h < 4; ++h) {
      if (std::toupper(static_cast<unsigned char>(cur.peek())) == kHandChars[h]) hand = h;
    }
    if (hand < 0) cur.fail_here(std::string("unexpected character '") + cur.peek() + "'");
    if (have[hand]) cur.fail_here(std::string("hand ") + kHandChars[hand] + " given twice");
    have[hand] = true;
    ++cur.pos;
    if (cur.done() || cur.peek() != ':') cur.fail_here("expected ':' after hand label");
    ++cur.pos;
    for (int suit = 0; suit < 4; ++suit) {
      while (!cur.done() && cur.peek() != '.' && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        int rank = rank_from_char(std::toupper(static_cast<unsigned char>(cur.peek())));
        if (rank < 0) cur.fail_here(std::string("'") + cur.peek() + "' is not a rank");
        add_card(deal, seen, hand, {uint8_t(suit), uint8_t(rank)}, params);
        ++cur.pos;
      }
      if (suit < 3) {
        if (cur.done() || cur.peek() != '.') cur.fail_here("expected '.' between suits");
        ++cur.pos;
      }
    }
  }
  cur.skip_ws();
  if (!cur.done()) cur.fail_here("trailing input after the last hand");
  check_hand_sizes(deal, params);
  return deal;
}

std::string format_deal_json(const Deal& deal, const GameParams& params) {
  nlohmann::ordered_json doc;
  doc["hands"] = nlohmann::json::array();
  for (int h = 0; h < params.hands; ++h) {
    nlohmann::ordered_json hand = nlohmann::ordered_json::array();
    for (Card c : deal.hands[h].cards()) hand.push_back({int(c.suit), int(c.rank)});
    doc["hands"].push_back(hand);
  }
  return doc.dump();
}

Deal parse_deal_json(const std::string& text, const GameParams& params) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("hands") || !doc["hands"].is_array()) {
    fail(errc::parse_error, "expected an object with a \"hands\" array");
  }
  const auto& hands = doc["hands"];
  if (int(hands.size()) != params.hands) {
    std::ostringstream os;
    os << "document lists " << hands.size() << " hands, expected " << params.hands;
    fail(errc::parse_error, os.str());
  }
  Deal deal;
  deal.hands.assign(params.hands, Hand(params.num_suits));
  std::vector<bool> seen(params.deck_size(), false);
  for (int h = 0; h < params.hands; ++h) {
    if (!hands[h].is_array()) fail(errc::parse_error, "each hand must be an array of [suit, rank] pairs");
    for (const auto& entry : hands[h]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer()) {
        fail(errc::parse_error, "each card must be an integer pair [suit, rank]");
      }
      long long suit = entry[0].get<long long>();
      long long rank = entry[1].get<long long>();
      if (suit < 0 || rank < 0 || suit >= params.num_suits || rank >= params.ranks_per_suit) {
        std::ostringstream os;
        os << "card (" << suit << "," << rank << ") outside " << int(params.num_suits) << " suits x "
           << int(params.ranks_per_suit) << " ranks";
        fail(errc::out_of_range, os.str());
      }
      add_card(deal, seen, h, {uint8_t(suit), uint8_t(rank)}, params);
    }
  }
  check_hand_sizes(deal, params);
  return deal;
}

Deal parse_deal_text(const std::string& text, const GameParams& params) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_deal_json(text, params);
    break;
  }
  return parse_deal_bridge(text, params);
}

}  // namespace tricktree
