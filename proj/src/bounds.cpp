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

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <vector>

#include "tricktree/error.hpp"

namespace tricktree {

ShapeTable ShapeTable::from_deal(const Deal& deal, const GameParams& params) {
  ShapeTable shape(params.hands, params.num_suits);
  for (int h = 0; h < params.hands; ++h) {
    for (int s = 0; s < params.num_suits; ++s) {
      shape.at(h, s) = std::popcount(deal.hands[h].suits[s]);
    }
  }
  shape.validate(params);
  return shape;
}

void ShapeTable::validate(const GameParams& params) const {
  if (hands_ != params.hands || suits_ != params.num_suits) {
    fail(errc::bad_shape, "shape table dimensions do not match the parametrization");
  }
  for (int h = 0; h < hands_; ++h) {
    int row = 0;
    for (int s = 0; s < suits_; ++s) {
      if (at(h, s) < 0) fail(errc::bad_shape, "negative suit count");
      row += at(h, s);
    }
    if (row != params.cards_per_hand) {
      std::ostringstream os;
      os << "hand " << h << " suit counts sum to " << row << ", expected " << params.cards_per_hand;
      fail(errc::bad_shape, os.str());
    }
  }
  for (int s = 0; s < suits_; ++s) {
    int col = 0;
    for (int h = 0; h < hands_; ++h) col += at(h, s);
    if (col != params.ranks_per_suit) {
      std::ostringstream os;
      os << "suit " << s << " counts sum to " << col << ", expected " << params.ranks_per_suit;
      fail(errc::bad_shape, os.str());
    }
  }
}

BigCount holding_count_bound(const GameParams& params, int k) {
  if (k < 0 || k > params.cards_per_hand) {
    fail(errc::out_of_range, "k must lie in [0, K]");
  }
  if (k == 0) return 1;
  BigCount lead_terms = 0;
  BigCount kp = 1;
  for (int h = 1; h <= params.hands - 1; ++h) {
    kp *= k;
    lead_terms += kp;
  }
  BigCount holdings = ipow(binomial(params.cards_per_hand, k), params.hands);
  return holdings * (1 + params.hands * lead_terms);
}

BigCount position_count_bound(const GameParams& params, int k) {
  return BigCount(params.cards_per_hand - k + 1) * holding_count_bound(params, k);
}

BigCount state_space_upper_bound(const GameParams& params, bool with_scores) {
  BigCount total = 0;
  for (int k = 0; k <= params.cards_per_hand; ++k) {
    total += with_scores ? position_count_bound(params, k) : holding_count_bound(params, k);
  }
  return total;
}

BigCount tree_size_upper_bound(const GameParams& params) {
  return ipow(factorial(params.cards_per_hand), params.hands);
}

BigCount tree_size_weak_lower_bound(const GameParams& params) {
  return factorial(params.cards_per_hand);
}

BigCount frank_lower_bound(const ShapeTable& shape, const GameParams& params) {
  shape.validate(params);
  BigCount product = 1;
  for (int h = 0; h < shape.hands(); ++h) {
    for (int s = 0; s < shape.suits(); ++s) {
      product *= factorial(shape.at(h, s));
    }
  }
  return product;
}

BigCount frank_lower_bound(const Deal& deal, const GameParams& params) {
  return frank_lower_bound(ShapeTable::from_deal(deal, params), params);
}

namespace {

// Shared context for the hand-by-hand shape recursion.
struct FrankEnumeration {
  const GameParams& params;
  uint64_t max_shapes;
  uint64_t shapes_seen = 0;
  // perm[n][s] = n!/(n-s)! = C(n,s)*s!, the weight of handing s cards of a
  // suit with n still undealt to the current hand.
  std::vector<std::vector<BigCount>> perm;
  // One memo per hand level, keyed by the sorted remaining-suit-count
  // vector. Sorting is sound: the summed weight is symmetric in the suits.
  std::vector<std::map<std::vector<uint8_t>, BigCount>> memo;

  explicit FrankEnumeration(const GameParams& p, uint64_t cap) : params(p), max_shapes(cap) {
    int nr = p.ranks_per_suit;
    perm.assign(nr + 1, {});
    for (int n = 0; n <= nr; ++n) {
      perm[n].assign(n + 1, 1);
      for (int s = 1; s <= n; ++s) perm[n][s] = perm[n][s - 1] * (n - s + 1);
    }
    memo.resize(p.hands);
  }

  // Sum over shapes (s_0..s_{NS-1}) of this hand, suit by suit. suffix[i]
  // holds the undealt total over suits [i..NS) as of entering this hand, so
  // choices are clipped to what the later suits can still absorb.
  void enumerate(int hand, int suit, int cards_left, const std::vector<int>& suffix,
                 std::vector<uint8_t>& rem, const BigCount& weight, BigCount& total) {
    if (suit == params.num_suits) {
      if (++shapes_seen > max_shapes) {
        fail(errc::too_large, "shape enumeration exceeded the configured cap");
      }
      total += weight * weighted_sum(hand + 1, rem);
      return;
    }
    int avail = rem[suit];
    int lo = std::max(0, cards_left - suffix[suit + 1]);
    int hi = std::min(avail, cards_left);
    for (int s = lo; s <= hi; ++s) {
      BigCount w = weight * perm[avail][s];
      rem[suit] = uint8_t(avail - s);
      enumerate(hand, suit + 1, cards_left - s, suffix, rem, w, total);
    }
    rem[suit] = uint8_t(avail);
  }

  // Sum over all ways to deal hands [hand..R) from the remaining suit
  // counts of (product over dealt hands of per-suit C(m,s)*s! terms).
  BigCount weighted_sum(int hand, std::vector<uint8_t>& rem) {
    if (hand == params.hands) return 1;
    std::vector<uint8_t> key = rem;
    std::sort(key.begin(), key.end());
    auto it = memo[hand].find(key);
    if (it != memo[hand].end()) return it->second;

    // The memoized value only depends on the multiset of counts, so
    // evaluate on the sorted vector to share work across permutations.
    std::vector<uint8_t> sorted = key;
    std::vector<int> suffix(params.num_suits + 1, 0);
    for (int i = params.num_suits - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + sorted[i];
    BigCount total = 0;
    enumerate(hand, 0, params.cards_per_hand, suffix, sorted, 1, total);
    memo[hand].emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

BigRatio expected_frank_bound_exact(const GameParams& params, uint64_t max_shapes) {
  FrankEnumeration ctx(params, max_shapes);
  std::vector<uint8_t> rem(params.num_suits, uint8_t(params.ranks_per_suit));
  BigCount weighted = ctx.weighted_sum(0, rem);
  // Uniform deals: (RK)! / (K!)^R of them.
  BigCount deals = factorial(params.hands * params.cards_per_hand) /
                   ipow(factorial(params.cards_per_hand), params.hands);
  return BigRatio(weighted, deals);
}

MomentAccumulator expected_frank_bound_mc(const GameParams& params, uint64_t n_deals, Xoshiro256& rng) {
  std::vector<BigCount> fact(params.cards_per_hand + 1);
  fact[0] = 1;
  for (int i = 1; i <= params.cards_per_hand; ++i) fact[i] = fact[i - 1] * i;
  // Per-hand products fit in 64 bits whenever K <= 20 (at most K!); combine
  // hands in big arithmetic only.
  bool small = params.cards_per_hand <= 20;
  std::vector<uint64_t> fact64(small ? params.cards_per_hand + 1 : 0);
  if (small) {
    fact64[0] = 1;
    for (int i = 1; i <= params.cards_per_hand; ++i) fact64[i] = fact64[i - 1] * uint64_t(i);
  }

  MomentAccumulator acc;
  for (uint64_t d = 0; d < n_deals; ++d) {
    Deal deal = deal_random(params, rng);
    BigCount x = 1;
    for (int h = 0; h < params.hands; ++h) {
      if (small) {
        uint64_t hand_product = 1;
        for (int s = 0; s < params.num_suits; ++s) {
          hand_product *= fact64[std::popcount(deal.hands[h].suits[s])];
        }
        x *= hand_product;
      } else {
        for (int s = 0; s < params.num_suits; ++s) {
          x *= fact[std::popcount(deal.hands[h].suits[s])];
        }
      }
    }
    acc.add(x);
  }
  return acc;
}

}  // namespace tricktree
