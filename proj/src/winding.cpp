#include "seaweed/winding.hpp"

#include <algorithm>
#include <set>

namespace seaweed {

bool is_down_move(MoveKind k) {
  switch (k) {
    case MoveKind::BlockElimination:
    case MoveKind::RotationContraction:
    case MoveKind::PureContraction:
    case MoveKind::FlipDown:
      return true;
    default:
      return false;
  }
}

MoveKind inverse(MoveKind k) {
  switch (k) {
    case MoveKind::BlockElimination: return MoveKind::BlockCreation;
    case MoveKind::RotationContraction: return MoveKind::RotationExpansion;
    case MoveKind::PureContraction: return MoveKind::PureExpansion;
    case MoveKind::FlipDown: return MoveKind::FlipUp;
    case MoveKind::BlockCreation: return MoveKind::BlockElimination;
    case MoveKind::RotationExpansion: return MoveKind::RotationContraction;
    case MoveKind::PureExpansion: return MoveKind::PureContraction;
    case MoveKind::FlipUp: return MoveKind::FlipDown;
  }
  throw InternalError("unknown move");
}

std::string_view move_name(MoveKind k) {
  switch (k) {
    case MoveKind::BlockElimination: return "block-elimination";
    case MoveKind::RotationContraction: return "rotation-contraction";
    case MoveKind::PureContraction: return "pure-contraction";
    case MoveKind::FlipDown: return "flip-down";
    case MoveKind::BlockCreation: return "block-creation";
    case MoveKind::RotationExpansion: return "rotation-expansion";
    case MoveKind::PureExpansion: return "pure-expansion";
    case MoveKind::FlipUp: return "flip-up";
  }
  throw InternalError("unknown move");
}

std::optional<MoveKind> move_from_name(std::string_view name) {
  for (MoveKind k : {MoveKind::BlockElimination, MoveKind::RotationContraction,
                     MoveKind::PureContraction, MoveKind::FlipDown, MoveKind::BlockCreation,
                     MoveKind::RotationExpansion, MoveKind::PureExpansion, MoveKind::FlipUp}) {
    if (move_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

std::vector<int> drop_first(const std::vector<int>& parts) {
  return std::vector<int>(parts.begin() + 1, parts.end());
}

std::vector<int> with_first(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

DownStep wind_down_step(const SeaweedType& t) {
  if (t.n() == 1) return DownStep{DownStep::Status::Terminal, std::nullopt, std::nullopt};

  const std::vector<int>& a = t.top().parts();
  const std::vector<int>& b = t.bottom().parts();
  const int a1 = a[0];
  const int b1 = b[0];

  if (a1 == b1) return DownStep{DownStep::Status::Stall, std::nullopt, std::nullopt};

  if (a1 < b1) {
    return DownStep{DownStep::Status::Moved, MoveKind::FlipDown, t.flipped()};
  }
  if (a1 == 2 * b1) {
    // Sums stay equal, so the bottom still has parts left after dropping b1.
    if (b.size() < 2) throw InternalError("block elimination would empty the bottom");
    SeaweedType next(Composition(with_first({b1}, drop_first(a))),
                     Composition(drop_first(b)));
    return DownStep{DownStep::Status::Moved, MoveKind::BlockElimination, std::move(next)};
  }
  if (a1 < 2 * b1) {
    SeaweedType next(Composition(with_first({b1}, drop_first(a))),
                     Composition(with_first({2 * b1 - a1}, drop_first(b))));
    return DownStep{DownStep::Status::Moved, MoveKind::RotationContraction, std::move(next)};
  }
  // a1 > 2*b1
  if (b.size() < 2) throw InternalError("pure contraction would empty the bottom");
  SeaweedType next(Composition(with_first({a1 - 2 * b1, b1}, drop_first(a))),
                   Composition(drop_first(b)));
  return DownStep{DownStep::Status::Moved, MoveKind::PureContraction, std::move(next)};
}

WindingTrace wind_down_sequence(const SeaweedType& t) {
  WindingTrace trace{t, {}, WindingTrace::Outcome::Completed};
  SeaweedType cur = t;
  while (true) {
    DownStep step = wind_down_step(cur);
    if (step.status == DownStep::Status::Terminal) {
      trace.outcome = WindingTrace::Outcome::Completed;
      return trace;
    }
    if (step.status == DownStep::Status::Stall) {
      trace.outcome = WindingTrace::Outcome::Stalled;
      return trace;
    }
    cur = *step.next;
    trace.steps.emplace_back(*step.move, cur);
  }
}

bool windup_applicable(const SeaweedType& t, MoveKind move) {
  switch (move) {
    case MoveKind::BlockCreation:
    case MoveKind::FlipUp:
      return true;
    case MoveKind::RotationExpansion:
      return t.top().parts()[0] > t.bottom().parts()[0];
    case MoveKind::PureExpansion:
      return t.top().size() >= 2;
    default:
      return false;
  }
}

SeaweedType wind_up(const SeaweedType& t, MoveKind move) {
  const std::vector<int>& a = t.top().parts();
  const std::vector<int>& b = t.bottom().parts();
  const int a1 = a[0];
  const int b1 = b[0];

  switch (move) {
    case MoveKind::BlockCreation:
      return SeaweedType(Composition(with_first({2 * a1}, drop_first(a))),
                         Composition(with_first({a1}, b)));
    case MoveKind::RotationExpansion:
      if (a1 <= b1) {
        throw PreconditionError("rotation expansion needs a1 > b1");
      }
      return SeaweedType(Composition(with_first({2 * a1 - b1}, drop_first(a))),
                         Composition(with_first({a1}, drop_first(b))));
    case MoveKind::PureExpansion: {
      if (a.size() < 2) {
        throw PreconditionError("pure expansion needs a second top part");
      }
      std::vector<int> tail(a.begin() + 2, a.end());
      return SeaweedType(Composition(with_first({a1 + 2 * a[1]}, tail)),
                         Composition(with_first({a[1]}, b)));
    }
    case MoveKind::FlipUp:
      return t.flipped();
    default:
      throw PreconditionError("wind_up takes an expansion move");
  }
}

std::vector<SeaweedType> enumerate_windup_reachable(int depth, int max_n) {
  if (depth < 0) throw PreconditionError("depth must be non-negative");

  const SeaweedType seed(Composition({1}), Composition({1}));
  std::set<SeaweedType> seen{seed};
  std::vector<SeaweedType> frontier{seed};

  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<SeaweedType> next;
    for (const SeaweedType& t : frontier) {
      for (MoveKind move : {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                            MoveKind::PureExpansion, MoveKind::FlipUp}) {
        if (!windup_applicable(t, move)) continue;
        SeaweedType r = wind_up(t, move);
        if (r.n() > max_n) continue;
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<SeaweedType>(seen.begin(), seen.end());
}

}  // namespace seaweed
