#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "seaweed/meander.hpp"
#include "seaweed/winding.hpp"

using namespace seaweed;

namespace {

std::vector<SeaweedType> all_types(int n_max) {
  std::vector<SeaweedType> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto comps = all_compositions(n);
    for (const Composition& top : comps) {
      for (const Composition& bottom : comps) out.emplace_back(top, bottom);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("move metadata") {
  CHECK(inverse(MoveKind::BlockElimination) == MoveKind::BlockCreation);
  CHECK(inverse(MoveKind::RotationExpansion) == MoveKind::RotationContraction);
  CHECK(inverse(MoveKind::PureContraction) == MoveKind::PureExpansion);
  CHECK(inverse(MoveKind::FlipUp) == MoveKind::FlipDown);
  for (MoveKind k : {MoveKind::BlockElimination, MoveKind::RotationContraction,
                     MoveKind::PureContraction, MoveKind::FlipDown}) {
    CHECK(is_down_move(k));
    CHECK_FALSE(is_down_move(inverse(k)));
    CHECK(inverse(inverse(k)) == k);
    CHECK(move_from_name(move_name(k)) == k);
  }
  CHECK_FALSE(move_from_name("sideways-shuffle").has_value());
}

TEST_CASE("down step on the induction base") {
  const DownStep step = wind_down_step(parse_type("2/1|1"));
  REQUIRE(step.status == DownStep::Status::Moved);
  CHECK(*step.move == MoveKind::BlockElimination);
  CHECK(format_type(*step.next) == "1/1");
}

TEST_CASE("down steps on the wide meander") {
  const DownStep flip = wind_down_step(parse_type("6|5|3/14"));
  REQUIRE(flip.status == DownStep::Status::Moved);
  CHECK(*flip.move == MoveKind::FlipDown);
  CHECK(format_type(*flip.next) == "14/6|5|3");

  // Pure contraction of 14/6|5|3: the top (14) has no trailing parts, so the
  // new top is exactly 2|6.
  const DownStep contract = wind_down_step(*flip.next);
  REQUIRE(contract.status == DownStep::Status::Moved);
  CHECK(*contract.move == MoveKind::PureContraction);
  CHECK(format_type(*contract.next) == "2|6/5|3");
  CHECK(is_frobenius(build_meander(*contract.next)));
}

TEST_CASE("down step terminal and stall") {
  CHECK(wind_down_step(parse_type("1/1")).status == DownStep::Status::Terminal);
  CHECK(wind_down_step(parse_type("2/2")).status == DownStep::Status::Stall);
  CHECK(wind_down_step(parse_type("3|1/3|1")).status == DownStep::Status::Stall);
}

TEST_CASE("down sequences") {
  const WindingTrace trivial = wind_down_sequence(parse_type("1/1"));
  CHECK(trivial.outcome == WindingTrace::Outcome::Completed);
  CHECK(trivial.steps.empty());

  const WindingTrace example = wind_down_sequence(parse_type("2|4/1|2|3"));
  CHECK(example.outcome == WindingTrace::Outcome::Completed);
  CHECK(format_type(example.final_type()) == "1/1");

  const WindingTrace stalled = wind_down_sequence(parse_type("3/3"));
  CHECK(stalled.outcome == WindingTrace::Outcome::Stalled);
  CHECK(format_type(stalled.final_type()) == "3/3");
}

TEST_CASE("expansion moves") {
  CHECK(format_type(wind_up(parse_type("1/1"), MoveKind::BlockCreation)) == "2/1|1");
  CHECK(format_type(wind_up(parse_type("2/1|1"), MoveKind::RotationExpansion)) == "3/2|1");
  CHECK(format_type(wind_up(parse_type("2|4/1|2|3"), MoveKind::PureExpansion)) == "10/4|1|2|3");
  CHECK(format_type(wind_up(parse_type("2/1|1"), MoveKind::FlipUp)) == "1|1/2");

  CHECK_THROWS_AS(wind_up(parse_type("1|2/3"), MoveKind::RotationExpansion), PreconditionError);
  CHECK_THROWS_AS(wind_up(parse_type("2/1|1"), MoveKind::PureExpansion), PreconditionError);
  CHECK_THROWS_AS(wind_up(parse_type("2/1|1"), MoveKind::FlipDown), PreconditionError);
}

TEST_CASE("flip down is an involution at the type level") {
  for (const SeaweedType& t : all_types(7)) {
    CHECK(t.flipped().flipped() == t);
  }
}

TEST_CASE("up moves then down steps invert") {
  for (const SeaweedType& t : all_types(7)) {
    const int a1 = t.top().parts()[0];
    const int b1 = t.bottom().parts()[0];
    for (MoveKind up : {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                        MoveKind::PureExpansion, MoveKind::FlipUp}) {
      if (!windup_applicable(t, up)) continue;
      // Flip-Up inverts through the down step only when it lands in the
      // a1 < b1 case; otherwise the down step contracts instead.
      if (up == MoveKind::FlipUp && a1 <= b1) continue;
      const SeaweedType image = wind_up(t, up);
      const DownStep down = wind_down_step(image);
      REQUIRE(down.status == DownStep::Status::Moved);
      CHECK(*down.move == inverse(up));
      CHECK(*down.next == t);
    }
  }
}

TEST_CASE("winding down completes exactly on Frobenius types") {
  for (const SeaweedType& t : all_types(8)) {
    const bool frob = is_frobenius(build_meander(t));
    const WindingTrace trace = wind_down_sequence(t);
    CAPTURE(format_type(t));
    CHECK((trace.outcome == WindingTrace::Outcome::Completed) == frob);
    if (frob) {
      CHECK(format_type(trace.final_type()) == "1/1");
    } else {
      const SeaweedType& stalled = trace.final_type();
      CHECK(stalled.top().parts()[0] == stalled.bottom().parts()[0]);
    }
  }
}

TEST_CASE("down moves preserve the graph index") {
  for (const SeaweedType& t : all_types(8)) {
    const int index = graph_index(build_meander(t));
    for (const auto& [move, type] : wind_down_sequence(t).steps) {
      CHECK(graph_index(build_meander(type)) == index);
    }
  }
}

TEST_CASE("n never grows on the way down and shrinks within two steps") {
  for (const SeaweedType& t : all_types(8)) {
    int previous = t.n();
    int same_count = 0;
    for (const auto& [move, type] : wind_down_sequence(t).steps) {
      CHECK(type.n() <= previous);
      if (type.n() == previous) {
        CHECK(move == MoveKind::FlipDown);
        ++same_count;
        CHECK(same_count <= 1);
      } else {
        same_count = 0;
      }
      previous = type.n();
    }
  }
}

TEST_CASE("windup enumeration small depths") {
  const auto depth0 = enumerate_windup_reachable(0);
  REQUIRE(depth0.size() == 1);
  CHECK(format_type(depth0[0]) == "1/1");

  const auto depth1 = enumerate_windup_reachable(1);
  std::set<std::string> names;
  for (const SeaweedType& t : depth1) names.insert(format_type(t));
  CHECK(names == std::set<std::string>{"1/1", "2/1|1"});
}

TEST_CASE("windup enumeration yields Frobenius types only") {
  for (const SeaweedType& t : enumerate_windup_reachable(5, 12)) {
    CHECK(is_frobenius(build_meander(t)));
  }
}

TEST_CASE("windup moves generate every Frobenius type") {
  const int n_max = 7;
  std::set<SeaweedType> expected;
  for (const SeaweedType& t : all_types(n_max)) {
    if (is_frobenius(build_meander(t))) expected.insert(t);
  }
  const auto reached = enumerate_windup_reachable(2 * n_max, n_max);
  CHECK(std::set<SeaweedType>(reached.begin(), reached.end()) == expected);
}
