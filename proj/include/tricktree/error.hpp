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

#ifndef TRICKTREE_ERROR_HPP_
#define TRICKTREE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tricktree {

// Failure categories. The CLI maps guard-type failures to exit code 3 and
// everything else to exit code 2.
enum class errc {
  deck_mismatch,    // NS*NR != R*K
  bad_trump,        // trump suit index out of range
  too_large,        // parameters beyond a configured enumeration cap
  terminal_state,   // move requested in a finished game
  illegal_move,     // card not among the legal moves
  incomplete_trick, // trick winner asked before all hands played
  out_of_range,     // k outside [0, K]
  bad_shape,        // shape table with inconsistent margins
  guard_exceeded,   // enumeration guard tripped
  incomplete_trace, // playout trace shorter than R*K
  parse_error,      // malformed deal text
  duplicate_card,   // same card twice in a deal
  wrong_hand_size,  // hand size != K in a deal
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

  // Guard-type failures are resource refusals, not bad input.
  bool is_guard() const {
    return code_ == errc::guard_exceeded || code_ == errc::too_large;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::deck_mismatch: return "DeckMismatch";
    case errc::bad_trump: return "BadTrump";
    case errc::too_large: return "TooLarge";
    case errc::terminal_state: return "TerminalState";
    case errc::illegal_move: return "IllegalMove";
    case errc::incomplete_trick: return "IncompleteTrick";
    case errc::out_of_range: return "OutOfRange";
    case errc::bad_shape: return "BadShape";
    case errc::guard_exceeded: return "GuardExceeded";
    case errc::incomplete_trace: return "IncompleteTrace";
    case errc::parse_error: return "ParseError";
    case errc::duplicate_card: return "DuplicateCard";
    case errc::wrong_hand_size: return "WrongHandSize";
  }
  return "UnknownError";
}

}  // namespace tricktree

#endif  // TRICKTREE_ERROR_HPP_
