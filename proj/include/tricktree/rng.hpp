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

#ifndef TRICKTREE_RNG_HPP_
#define TRICKTREE_RNG_HPP_

#include <array>
#include <cstdint>

namespace tricktree {

// splitmix64 output function (Steele, Lea, Flood). Used both to expand seeds
// and to derive independent substreams.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// The index-th output of the splitmix64 sequence seeded with `master`.
//
// This is the documented stream-split rule: every simulation unit (a game, a
// deal, a playout channel) gets stream_seed(master_seed, unit_index), so
// results depend only on the master seed and the unit index, never on how
// units are assigned to worker threads.
inline uint64_t stream_seed(uint64_t master, uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// xoshiro256** 1.0 (Blackman, Vigna). Small state, fast, and with a
// bit-for-bit portable output sequence, which the reproducibility contract
// requires; <random> distributions are not portable across standard
// libraries.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed) {
    uint64_t z = seed;
    for (auto& word : state_) {
      z += 0x9E3779B97F4A7C15ULL;
      word = mix64(z);
    }
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Exactly uniform draw from [0, n) by multiply-shift with rejection
  // (Lemire). Exact uniformity matters: the tree-size estimator is unbiased
  // only under exactly uniform move selection.
  uint64_t uniform_below(uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<uint64_t>(m);
    if (low < n) {
      const uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> state_;
};

// Fisher-Yates shuffle in the fixed downward order, so shuffles are
// reproducible from the RNG stream alone.
template <typename T>
void shuffle(T* data, size_t n, Xoshiro256& rng) {
  for (size_t i = n - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(rng.uniform_below(i + 1));
    T tmp = data[i];
    data[i] = data[j];
    data[j] = tmp;
  }
}

}  // namespace tricktree

#endif  // TRICKTREE_RNG_HPP_
