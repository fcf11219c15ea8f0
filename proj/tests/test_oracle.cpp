#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "seaweed/oracle.hpp"
#include "seaweed/spectrum.hpp"

using namespace seaweed;

namespace {

SpectrumMultiset multiset(std::initializer_list<std::pair<long long, long long>> entries) {
  SpectrumMultiset out;
  for (auto [v, m] : entries) out.add(v, m);
  return out;
}

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

TEST_CASE("fraction strings are lowest terms with positive denominators") {
  CHECK(fraction_string(Rational(-7, 6)) == "-7/6");
  CHECK(fraction_string(Rational(-22, 6)) == "-11/3");
  CHECK(fraction_string(Rational(0)) == "0/1");
  CHECK(fraction_string(Rational(4, 2)) == "2/1");
}

TEST_CASE("bareiss rank on known matrices") {
  IntMatrix identity(4, 4);
  for (int i = 0; i < 4; ++i) identity.at(i, i) = 1;
  CHECK(rank_bareiss(identity) == 4);

  IntMatrix zero(3, 5);
  CHECK(rank_bareiss(zero) == 0);

  // Third row is the sum of the first two.
  IntMatrix dependent(3, 3);
  const int values[3][3] = {{2, 3, 5}, {1, -1, 4}, {3, 2, 9}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) dependent.at(i, j) = values[i][j];
  }
  CHECK(rank_bareiss(dependent) == 2);

  // Entries large enough to overflow any fixed-width intermediate.
  IntMatrix big(2, 2);
  big.at(0, 0) = Int("123456789012345678901234567890");
  big.at(0, 1) = 2;
  big.at(1, 0) = 3;
  big.at(1, 1) = Int("987654321098765432109876543210");
  CHECK(rank_bareiss(big) == 2);
}

TEST_CASE("rank agrees with a pivot-counting rational elimination") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<int>(rng() % 7) - 3;
    }
    // Reference: plain rational row reduction.
    std::vector<std::vector<Rational>> a(static_cast<size_t>(rows),
                                         std::vector<Rational>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    }
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
      int pivot = -1;
      for (int i = row; i < rows; ++i) {
        if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(row)]);
      for (int i = row + 1; i < rows; ++i) {
        const Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                           a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int j = col; j < cols; ++j) {
          a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              f * a[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
      }
      ++row;
      ++rank;
    }
    CHECK(rank_bareiss(m) == rank);
  }
}

TEST_CASE("exact solver on a known system") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 3;
  const auto x = solve_exact(a, {Int(1), Int(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 5));
  CHECK((*x)[1] == Rational(3, 5));

  IntMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 2;
  singular.at(1, 0) = 2;
  singular.at(1, 1) = 4;
  CHECK_FALSE(solve_exact(singular, {Int(1), Int(1)}).has_value());
}

TEST_CASE("dk functional support is the directed edge set") {
  CHECK(dk_functional(directed_meander(parse_type("2|4/1|2|3"))).support ==
        std::set<std::pair<int, int>>{{2, 1}, {6, 3}, {5, 4}, {2, 3}, {4, 6}});
  CHECK(dk_functional(directed_meander(parse_type("1/1"))).support.empty());
  CHECK(dk_functional(directed_meander(parse_type("2/1|1"))).support ==
        std::set<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("kirillov matrix of the Cartan seaweed is the zero form") {
  const KirillovMatrix km =
      kirillov_matrix(parse_type("1|1/1|1"), dk_functional(directed_meander(parse_type("1|1/1|1"))));
  REQUIRE(km.dim() == 1);
  CHECK(km.basis[0].kind == BasisElement::Kind::Cartan);
  CHECK(km.entries.at(0, 0) == 0);
  CHECK(kernel_dimension(km) == 1);
}

TEST_CASE("kirillov matrix of the two-vertex Borel") {
  const SeaweedType t = parse_type("2/1|1");
  const KirillovMatrix km = kirillov_matrix(t, dk_functional(directed_meander(t)));
  REQUIRE(km.dim() == 2);
  // Basis order: e_{2,1}, then the Cartan difference.
  CHECK(km.basis[0].kind == BasisElement::Kind::OffDiagonal);
  CHECK(km.entries.at(0, 0) == 0);
  CHECK(km.entries.at(0, 1) == 2);
  CHECK(km.entries.at(1, 0) == -2);
  CHECK(km.entries.at(1, 1) == 0);
  CHECK(kernel_dimension(km) == 0);
}

TEST_CASE("kirillov matrix bytes are reproducible in the canonical basis order") {
  const SeaweedType t = parse_type("2|2/1|3");
  const KirillovMatrix km = kirillov_matrix(t, dk_functional(directed_meander(t)));
  std::string dump;
  for (const BasisElement& b : km.basis) {
    dump += b.kind == BasisElement::Kind::OffDiagonal
                ? "e" + std::to_string(b.i) + std::to_string(b.j)
                : "h" + std::to_string(b.i);
    dump += " ";
  }
  dump += "|";
  for (int r = 0; r < km.dim(); ++r) {
    for (int c = 0; c < km.dim(); ++c) dump += " " + km.entries.at(r, c).str();
  }
  CHECK(dump ==
        "e21 e23 e24 e34 e43 h1 h2 h3 |"
        " 0 0 0 0 0 2 -1 0"
        " 0 0 0 1 0 0 0 0"
        " 0 0 0 0 0 1 -1 -1"
        " 0 -1 0 0 0 0 0 0"
        " 0 0 0 0 0 0 -1 2"
        " -2 0 -1 0 0 0 0 0"
        " 1 0 1 0 1 0 0 0"
        " 0 0 1 0 -2 0 0 0");
}

TEST_CASE("kirillov matrix of the six-vertex example has full rank") {
  const SeaweedType t = parse_type("2|4/1|2|3");
  const KirillovMatrix km = kirillov_matrix(t, dk_functional(directed_meander(t)));
  REQUIRE(km.dim() == 16);
  CHECK(rank_bareiss(km.entries) == 16);
}

TEST_CASE("kirillov matrices are antisymmetric for arbitrary weights") {
  std::mt19937 rng(1331);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const SeaweedType t(composition_from_mask(n, rng() % (1ULL << (n - 1))),
                        composition_from_mask(n, rng() % (1ULL << (n - 1))));
    WeightedFunctional f;
    for (auto [i, j] : seaweed_shape(t).admissible) {
      if (rng() % 2) f[{i, j}] = 1 + static_cast<long long>(rng() % 5);
    }
    const KirillovMatrix km = kirillov_matrix(t, f);
    for (int x = 0; x < km.dim(); ++x) {
      for (int y = 0; y < km.dim(); ++y) {
        CHECK(km.entries.at(x, y) == -km.entries.at(y, x));
      }
    }
  }
}

TEST_CASE("oracle index on the frozen examples") {
  CHECK(oracle_index(parse_type("2|4/1|2|3")) == 0);
  CHECK(oracle_index(parse_type("2/2")) == 1);
  CHECK(oracle_index(parse_type("1|1/1|1")) == 1);
  // The whole algebra: index equals the rank.
  CHECK(oracle_index(parse_type("4/4")) == 3);
  CHECK(oracle_index(parse_type("1/1")) == 0);
}

TEST_CASE("oracle principal elements match the frozen examples") {
  const PrincipalElement example = oracle_principal(parse_type("2|4/1|2|3"));
  CHECK(example.diag == std::vector<Rational>{Rational(-7, 6), Rational(-1, 6), Rational(-7, 6),
                                             Rational(5, 6), Rational(11, 6), Rational(-1, 6)});
  const PrincipalElement borel = oracle_principal(parse_type("2/1|1"));
  CHECK(borel.diag == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(oracle_principal(parse_type("2/2")), NotFrobeniusError);
}

TEST_CASE("oracle spectra match the frozen examples") {
  CHECK(oracle_spectrum(parse_type("2|4/1|2|3")) ==
        multiset({{-2, 1}, {-1, 2}, {0, 5}, {1, 5}, {2, 2}, {3, 1}}));
  CHECK(oracle_spectrum(parse_type("2|2/1|3")) == multiset({{-1, 1}, {0, 3}, {1, 3}, {2, 1}}));
  CHECK(oracle_spectrum(parse_type("2/1|1")) == multiset({{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(oracle_spectrum(parse_type("2/2")), NotFrobeniusError);
}

TEST_CASE("oracle agrees with the meander pipeline exhaustively") {
  for (const SeaweedType& t : all_types(6)) {
    CAPTURE(format_type(t));
    const Meander m = build_meander(t);
    const int gidx = graph_index(m);
    CHECK(oracle_index(t) == gidx);
    CHECK(is_frobenius(m) == (oracle_index(t) == 0));
    if (gidx == 0) {
      CHECK(oracle_principal(t).diag == principal_element(orient(m)).diag);
      CHECK(oracle_spectrum(t) == spectrum(t));
    }
  }
}

TEST_CASE("no random functional undercuts the kernel minimum") {
  std::mt19937 rng(555000111);
  for (const SeaweedType& t : all_types(6)) {
    if (t.n() < 2) continue;
    const int reference = oracle_index(t);
    const auto admissible = seaweed_shape(t).admissible;
    for (int trial = 0; trial < 25; ++trial) {
      WeightedFunctional f;
      for (auto [i, j] : admissible) f[{i, j}] = 1 + static_cast<long long>(rng() % 5);
      CHECK(kernel_dimension(kirillov_matrix(t, f)) >= reference);
    }
  }
}

TEST_CASE("oracle agrees with the meander route on a large seaweed") {
  // 132-dimensional algebra: exercises the solver and spectrum extraction
  // well beyond the exhaustive range.
  const SeaweedType t = parse_type("6|5|3/14");
  CHECK(oracle_index(t) == 0);
  CHECK(oracle_principal(t).diag == principal_element(directed_meander(t)).diag);
  CHECK(oracle_spectrum(t) == spectrum(t));
}
