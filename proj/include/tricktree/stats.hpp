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

#ifndef TRICKTREE_STATS_HPP_
#define TRICKTREE_STATS_HPP_

#include <cmath>
#include <cstdint>

#include "tricktree/bigcount.hpp"

namespace tricktree {

// Running moments of integer-valued samples, kept in exact arithmetic so
// that merging partial accumulators is associative and the reported mean is
// independent of how the samples were sharded across workers. Conversion to
// double happens only when a caller asks for a floating-point summary.
struct MomentAccumulator {
  uint64_t n = 0;
  BigCount sum = 0;
  BigCount sum_sq = 0;
  BigCount min_v = 0;
  BigCount max_v = 0;

  void add(const BigCount& x) {
    if (n == 0) {
      min_v = x;
      max_v = x;
    } else {
      if (x < min_v) min_v = x;
      if (x > max_v) max_v = x;
    }
    ++n;
    sum += x;
    sum_sq += x * x;
  }

  void merge(const MomentAccumulator& other) {
    if (other.n == 0) return;
    if (n == 0) {
      *this = other;
      return;
    }
    n += other.n;
    sum += other.sum;
    sum_sq += other.sum_sq;
    if (other.min_v < min_v) min_v = other.min_v;
    if (other.max_v > max_v) max_v = other.max_v;
  }

  BigRatio mean() const { return n ? BigRatio(sum, BigCount(n)) : BigRatio(0); }

  // Unbiased sample variance, (sum_sq - n*mean^2) / (n - 1), exactly.
  BigRatio variance() const {
    if (n < 2) return BigRatio(0);
    BigCount nn(n);
    BigCount num = nn * sum_sq - sum * sum;
    return BigRatio(num, nn * BigCount(n - 1));
  }

  double stddev() const { return std::sqrt(to_double(variance())); }

  double stderr_of_mean() const {
    if (n < 2) return 0.0;
    return std::sqrt(to_double(variance()) / double(n));
  }

  bool operator==(const MomentAccumulator&) const = default;
};

}  // namespace tricktree

#endif  // TRICKTREE_STATS_HPP_
