#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "seaweed/exact.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"

namespace seaweed {

// One element of the seaweed's canonical basis: a matrix unit e_{i,j} at an
// admissible off-diagonal position, or the traceless Cartan difference
// e_{i,i} - e_{i+1,i+1}.
struct BasisElement {
  enum class Kind { OffDiagonal, Cartan };
  Kind kind = Kind::OffDiagonal;
  int i = 0;
  int j = 0;  // unused for Cartan
  bool operator==(const BasisElement&) const = default;
};

// Admissible off-diagonals in lexicographic order, then Cartan 1..n-1. Fixed
// so Kirillov matrices are byte-reproducible.
std::vector<BasisElement> canonical_basis(const SeaweedShape& shape);

// Support of a coordinate-sum functional F_S = sum over S of e*_s.
struct FunctionalSupport {
  std::set<std::pair<int, int>> support;
  bool operator==(const FunctionalSupport&) const = default;
};

// The Dergachev-Kirillov functional: its support is exactly the directed
// meander's edge set.
FunctionalSupport dk_functional(const DirectedMeander& dm);

// Integer-weighted functional, for the regularity spot checks.
using WeightedFunctional = std::map<std::pair<int, int>, long long>;

struct KirillovMatrix {
  std::vector<BasisElement> basis;
  IntMatrix entries;  // entries.at(x, y) = F([b_x, b_y]); antisymmetric

  int dim() const { return entries.rows(); }
};

// Commutators are evaluated in gl(n); values outside F's support vanish, so
// no projection onto the seaweed is needed.
KirillovMatrix kirillov_matrix(const SeaweedType& t, const FunctionalSupport& f);
KirillovMatrix kirillov_matrix(const SeaweedType& t, const WeightedFunctional& f);

int kernel_dimension(const KirillovMatrix& km);

// The algebra's index: the smallest Kirillov-form kernel dimension over
// functionals, computed by exact fraction-free elimination at the DK
// functional and at deterministically seeded generic weightings (the DK
// functional alone is not regular once the meander has two parallel
// cycles). Independent of the meander component count.
int oracle_index(const SeaweedType& t);

// Solves F([x, b_y]) = F(b_y) over the canonical basis for the principal
// element x, checks the solution is diagonal with trace zero, and re-verifies
// the defining property. raw_measures is left empty: no walk is involved.
PrincipalElement oracle_principal(const SeaweedType& t);

// Matrix of ad(principal element) on the canonical basis, asserted diagonal
// with integer entries; returns the diagonal as a multiset.
SpectrumMultiset oracle_spectrum(const SeaweedType& t);

}  // namespace seaweed
