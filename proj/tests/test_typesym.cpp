#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "seaweed/types.hpp"

using namespace seaweed;

TEST_CASE("parse accepts a multi-part symbol") {
  const SeaweedType t = parse_type("2|4/1|2|3");
  CHECK(t.top().parts() == std::vector<int>{2, 4});
  CHECK(t.bottom().parts() == std::vector<int>{1, 2, 3});
  CHECK(t.n() == 6);
}

TEST_CASE("parse accepts the smallest symbol") {
  const SeaweedType t = parse_type("1/1");
  CHECK(t.top().parts() == std::vector<int>{1});
  CHECK(t.bottom().parts() == std::vector<int>{1});
  CHECK(t.n() == 1);
}

TEST_CASE("parse tolerates whitespace around tokens") {
  const SeaweedType t = parse_type("  2 |4 / 1| 2 |3\t");
  CHECK(format_type(t) == "2|4/1|2|3");
}

TEST_CASE("sum mismatch is rejected") {
  CHECK_THROWS_WITH_AS(parse_type("2|3/4"), doctest::Contains("sums to"), ParseError);
  try {
    parse_type("2|3/4");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::SumMismatch);
  }
}

TEST_CASE("zero parts are rejected") {
  try {
    parse_type("0|2/2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::ZeroPart);
  }
}

TEST_CASE("malformed symbols are rejected as syntax errors") {
  for (const char* bad : {"", "2|4", "/1", "2/", "2||4/6", "|2/2", "2|/2", "a/1", "-1/1",
                          "+2/2", "2/1|1/1", "2 4/6", "1/1 x"}) {
    CAPTURE(bad);
    try {
      parse_type(bad);
      FAIL_CHECK("accepted: ", bad);
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::Syntax);
    }
  }
}

TEST_CASE("the n cap applies") {
  try {
    parse_type("65/65", 64);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::LimitExceeded);
  }
  CHECK_NOTHROW(parse_type("64/64", 64));
}

TEST_CASE("leading zeros read as decimal") {
  CHECK(format_type(parse_type("02/002")) == "2/2");
}

TEST_CASE("format produces the canonical symbol") {
  CHECK(format_type(SeaweedType(Composition({2, 4}), Composition({1, 2, 3}))) == "2|4/1|2|3");
  CHECK(format_type(SeaweedType(Composition({14}), Composition({6, 5, 3}))) == "14/6|5|3");
  CHECK(format_type(SeaweedType(Composition({1}), Composition({1}))) == "1/1");
}

TEST_CASE("round trip over random types") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const unsigned long long top_mask = rng() % (1ULL << (n - 1));
    const unsigned long long bottom_mask = rng() % (1ULL << (n - 1));
    const SeaweedType t(composition_from_mask(n, top_mask), composition_from_mask(n, bottom_mask));
    CHECK(parse_type(format_type(t)) == t);
  }
}

TEST_CASE("fuzzing returns errors instead of crashing") {
  std::mt19937 rng(987654321);
  const std::string alphabet = "0123456789|/ \t-+ab\xff\x01";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    try {
      const SeaweedType t = parse_type(text);
      CHECK(parse_type(format_type(t)) == t);
    } catch (const ParseError&) {
      // expected for the bulk of random inputs
    }
  }
}

TEST_CASE("compositions enumerate by cut mask") {
  const auto comps = all_compositions(4);
  REQUIRE(comps.size() == 8);
  CHECK(comps[0].parts() == std::vector<int>{4});
  CHECK(comps[1].parts() == std::vector<int>{1, 3});
  CHECK(comps[7].parts() == std::vector<int>{1, 1, 1, 1});
  for (const Composition& c : comps) CHECK(c.n() == 4);
}

TEST_CASE("flip swaps the compositions") {
  const SeaweedType t = parse_type("2|4/1|2|3");
  CHECK(format_type(t.flipped()) == "1|2|3/2|4");
  CHECK(t.flipped().flipped() == t);
}
