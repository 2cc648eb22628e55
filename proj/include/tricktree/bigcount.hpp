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

#ifndef TRICKTREE_BIGCOUNT_HPP_
#define TRICKTREE_BIGCOUNT_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tricktree {

// All counts and bounds are kept exact until rendering; bridge-sized values
// exceed 10^39, well past both 64-bit integers and exactly representable
// doubles.
using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);
BigCount ipow(const BigCount& base, unsigned exp);

double to_double(const BigCount& v);
double to_double(const BigRatio& v);

// Scientific-notation rendering with explicit significant-digit control,
// round half up: to_sci(1503...e39, 2) == "1.5e39". Rendering is the only
// lossy step anywhere in the library.
std::string to_sci(const BigCount& v, int sig_digits);
std::string to_sci(const BigRatio& v, int sig_digits);

// Canonical "numerator/denominator" form ("42" when integral).
std::string ratio_string(const BigRatio& v);

}  // namespace tricktree

#endif  // TRICKTREE_BIGCOUNT_HPP_
