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

#ifndef TRICKTREE_DEAL_IO_HPP_
#define TRICKTREE_DEAL_IO_HPP_

#include <string>

#include "tricktree/engine.hpp"

namespace tricktree {

// Bridge deal notation, only valid for the (4,13,4,13) parametrization:
//   N:AKQJ.T98.765.432 E:... S:... W:...
// Hands N,E,S,W are hands 0..3; the four dot-separated groups are spades,
// hearts, diamonds, clubs (suits 0..3); ranks use AKQJT98765432 in
// descending order (A is rank index 12). Empty suits are allowed.
std::string format_deal_bridge(const Deal& deal, const GameParams& params);
Deal parse_deal_bridge(const std::string& text, const GameParams& params);

// Generalized structured-text deal: a JSON document listing, per hand, an
// array of [suit, rank] integer pairs:
//   {"hands": [[[0,1],[1,0]], [[0,0],[1,1]]]}
std::string format_deal_json(const Deal& deal, const GameParams& params);
Deal parse_deal_json(const std::string& text, const GameParams& params);

// Accepts either format (a document starting with '{' is treated as JSON).
// Both parsers reject duplicated cards, out-of-range cards, and hands whose
// size is not K.
Deal parse_deal_text(const std::string& text, const GameParams& params);

}  // namespace tricktree

#endif  // TRICKTREE_DEAL_IO_HPP_
