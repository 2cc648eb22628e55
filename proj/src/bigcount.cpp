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

#include "tricktree/bigcount.hpp"

#include <cassert>
#include <cstdlib>

namespace tricktree {

BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // always divides exactly at each step
  }
  return r;
}

BigCount ipow(const BigCount& base, unsigned exp) {
  BigCount r = 1;
  BigCount b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

double to_double(const BigCount& v) { return v.convert_to<double>(); }
double to_double(const BigRatio& v) { return v.convert_to<double>(); }

namespace {

// Renders |digits| (a nonempty decimal string of an integer >= 1 scaled so
// that the represented value is digits * 10^(exp10 - len + 1)) after rounding
// to sig significant digits, half up.
std::string render_digits(std::string digits, long exp10, int sig) {
  if (static_cast<int>(digits.size()) > sig) {
    bool round_up = digits[sig] >= '5';
    digits.resize(sig);
    if (round_up) {
      int i = sig - 1;
      while (i >= 0 && digits[i] == '9') digits[i--] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        digits.resize(sig);
        ++exp10;
      } else {
        ++digits[i];
      }
    }
  } else {
    digits.append(sig - digits.size(), '0');
  }
  std::string out;
  out += digits[0];
  if (sig > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  out += std::to_string(exp10);
  return out;
}

}  // namespace

std::string to_sci(const BigCount& v, int sig_digits) {
  assert(sig_digits >= 1);
  if (v == 0) return "0";
  BigCount a = v < 0 ? BigCount(-v) : v;
  std::string digits = a.str();
  std::string out =
      render_digits(digits, static_cast<long>(digits.size()) - 1, sig_digits);
  return v < 0 ? "-" + out : out;
}

std::string to_sci(const BigRatio& v, int sig_digits) {
  assert(sig_digits >= 1);
  if (v == 0) return "0";
  BigCount num = boost::multiprecision::numerator(v);
  BigCount den = boost::multiprecision::denominator(v);
  bool neg = num < 0;
  if (neg) num = -num;

  // exp10 = floor(log10(num/den)) found by digit counts plus one comparison.
  long nd = static_cast<long>(num.str().size());
  long dd = static_cast<long>(den.str().size());
  long exp10 = nd - dd;
  BigCount scaled_den = den;
  if (exp10 > 0)
    scaled_den *= ipow(BigCount(10), static_cast<unsigned>(exp10));
  BigCount scaled_num = num;
  if (exp10 < 0)
    scaled_num *= ipow(BigCount(10), static_cast<unsigned>(-exp10));
  if (scaled_num < scaled_den) {
    --exp10;
    scaled_num *= 10;
  }
  // Now 1 <= scaled_num/scaled_den < 10; extract sig digits with a final
  // half-up rounding division.
  BigCount shifted =
      scaled_num * ipow(BigCount(10), static_cast<unsigned>(sig_digits - 1));
  BigCount q = (2 * shifted + scaled_den) / (2 * scaled_den);
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > sig_digits) {
    // rounding carried 9.99.. up to 10.0..
    ++exp10;
    digits.resize(sig_digits);
  }
  std::string out = render_digits(digits, exp10, sig_digits);
  return neg ? "-" + out : out;
}

std::string ratio_string(const BigRatio& v) {
  BigCount num = boost::multiprecision::numerator(v);
  BigCount den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace tricktree
