#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "seaweed/types.hpp"

namespace seaweed {

// The four index-preserving contraction moves and their four inverses.
// Exactly one down-move applies to any type with a1 != b1; the up-moves
// generate every Frobenius type from 1/1.
enum class MoveKind {
  BlockElimination,     // a1 == 2*b1: drop the leading bottom part
  RotationContraction,  // b1 < a1 < 2*b1
  PureContraction,      // a1 > 2*b1
  FlipDown,             // a1 < b1: swap the compositions
  BlockCreation,
  RotationExpansion,    // needs a1 > b1
  PureExpansion,        // needs a second top part
  FlipUp,
};

bool is_down_move(MoveKind k);
MoveKind inverse(MoveKind k);

// Kebab-case names used in CLI arguments and JSON.
std::string_view move_name(MoveKind k);
std::optional<MoveKind> move_from_name(std::string_view name);

struct DownStep {
  enum class Status {
    Moved,
    Terminal,  // t is 1/1
    Stall,     // a1 == b1 with n > 1: the non-Frobenius obstruction
  };
  Status status = Status::Terminal;
  std::optional<MoveKind> move;
  std::optional<SeaweedType> next;
};

// The unique applicable down-move. Never grows n; Flip-Down keeps it equal.
DownStep wind_down_step(const SeaweedType& t);

struct WindingTrace {
  enum class Outcome { Completed, Stalled };

  SeaweedType start;
  std::vector<std::pair<MoveKind, SeaweedType>> steps;
  Outcome outcome = Outcome::Completed;

  const SeaweedType& final_type() const { return steps.empty() ? start : steps.back().second; }
};

// Iterates wind_down_step until Terminal or Stall. Completes exactly on
// Frobenius types (verified exhaustively in the test suite, not assumed).
WindingTrace wind_down_sequence(const SeaweedType& t);

// Applies one expansion move; throws PreconditionError when its condition
// fails or a down-move is passed.
SeaweedType wind_up(const SeaweedType& t, MoveKind move);

bool windup_applicable(const SeaweedType& t, MoveKind move);

// Every type reachable from 1/1 by at most `depth` up-moves, deduplicated and
// sorted. Moves whose result would exceed max_n are pruned; since up-moves
// never shrink n this loses nothing below the cap.
std::vector<SeaweedType> enumerate_windup_reachable(int depth, int max_n = kDefaultMaxN);

}  // namespace seaweed
