#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "seaweed/exact.hpp"
#include "seaweed/meander.hpp"

namespace seaweed {

// Which matrix positions the seaweed occupies off the diagonal. A pair (i,j)
// below the diagonal (i > j) is admissible when i and j share a top block;
// above the diagonal (i < j) when they share a bottom block. The diagonal
// contributes the n-1 traceless Cartan directions.
struct SeaweedShape {
  int n = 0;
  std::vector<std::pair<int, int>> admissible;  // lexicographically sorted
  int cartan_dim = 0;

  int dimension() const { return static_cast<int>(admissible.size()) + cartan_dim; }
};

SeaweedShape seaweed_shape(const SeaweedType& t);

// 1-based block index of each vertex on one side.
std::vector<int> block_of(const Composition& c);

// First and last vertex of a block; index is 1-based. Throws RangeError.
std::pair<int, int> block_range(const SeaweedType& t, bool top, int index);

// Measures along a single-path (Frobenius) meander. One O(n) walk caches the
// measure D_v from every vertex to the reference vertex; then
// m(i,j) = D_i - D_j by path additivity. Throws NotFrobeniusError otherwise.
class PathMeasures {
 public:
  // reference_vertex 0 selects v_n.
  explicit PathMeasures(const DirectedMeander& dm, int reference_vertex = 0);

  int n() const { return static_cast<int>(raw_.size()) - 1; }
  int reference_vertex() const { return reference_; }
  long long measure(int i, int j) const {
    return raw_[static_cast<size_t>(i)] - raw_[static_cast<size_t>(j)];
  }
  // D, 1-indexed ([0] unused).
  const std::vector<long long>& raw() const { return raw_; }

 private:
  int reference_ = 0;
  std::vector<long long> raw_;
};

// Measure of the path from v_i to v_j: forward edges minus backward edges.
long long measure(const DirectedMeander& dm, int i, int j);

// Diagonal of the principal element. diag is the measure vector D shifted by
// the rational constant that makes the trace vanish; it does not depend on
// the reference vertex.
struct PrincipalElement {
  std::vector<Rational> diag;
  int reference_vertex = 0;
  std::vector<long long> raw_measures;  // D in vertex order (not 1-indexed)
};

PrincipalElement principal_element(const DirectedMeander& dm, int reference_vertex = 0);

// Multiset of integer eigenvalues.
struct SpectrumMultiset {
  std::map<long long, long long> counts;
  long long total = 0;

  void add(long long value, long long multiplicity = 1);
  long long multiplicity(long long value) const;
  bool empty() const { return total == 0; }
  bool operator==(const SpectrumMultiset&) const = default;
};

// Disjoint union.
SpectrumMultiset merge(const SpectrumMultiset& a, const SpectrumMultiset& b);

// Adjoint spectrum of the principal element: one measure m(i,j) per
// admissible pair plus n-1 zeros for the Cartan directions.
SpectrumMultiset spectrum(const SeaweedType& t);

// Same, reusing an existing walk and shape.
SpectrumMultiset spectrum_from_measures(const PathMeasures& pm, const SeaweedShape& shape);

enum class BlockSide { Top, Bottom };

// Eigenvalues contributed by one block: the measures of its internal ordered
// pairs (downward pairs for a top block, upward for a bottom block) plus
// floor(size/2) zeros. The contributions of all blocks partition the
// spectrum.
SpectrumMultiset block_contribution(const DirectedMeander& dm, BlockSide side, int index);

// Sets (not multisets) of measures over the vertex range [j..p].
struct BlockSets {
  std::set<long long> sigma_left;   // m(i,k) for j <= k <= i <= p
  std::set<long long> sigma_right;  // m(i,k) for j <= i <= k <= p
  std::set<long long> tau_left;     // m(i,j) for j <= i <= p
  std::set<long long> tau_right;    // m(i,p) for j <= i <= p
};

BlockSets sigma_tau(const DirectedMeander& dm, int j, int p);

// Measures of adjacent same-block vertex pairs: top[i] = m(i+1,i) when v_i
// and v_{i+1} share a top block, bottom[i] = m(i,i+1) when they share a
// bottom block.
struct SimpleEigenvalues {
  std::map<int, long long> top;
  std::map<int, long long> bottom;
  bool operator==(const SimpleEigenvalues&) const = default;
};

// Route (a): differences of the cached measure vector.
SimpleEigenvalues simple_eigenvalues_by_measure(const DirectedMeander& dm);

// Route (b): seed value 1 under the innermost arc of every even block, then
// propagate through arc-pairing and top/bottom-negation relations to a fixed
// point. Throws PropagationError if any value stays undetermined.
SimpleEigenvalues simple_eigenvalues_by_propagation(const DirectedMeander& dm);

// Both routes, asserted equal.
SimpleEigenvalues simple_eigenvalues(const DirectedMeander& dm);

}  // namespace seaweed
