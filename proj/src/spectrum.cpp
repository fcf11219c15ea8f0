#include "seaweed/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace seaweed {

std::vector<int> block_of(const Composition& c) {
  std::vector<int> out(static_cast<size_t>(c.n()) + 1, 0);
  int v = 1;
  for (int b = 0; b < c.size(); ++b) {
    for (int k = 0; k < c[b]; ++k) out[static_cast<size_t>(v++)] = b + 1;
  }
  return out;
}

std::pair<int, int> block_range(const SeaweedType& t, bool top, int index) {
  const Composition& c = top ? t.top() : t.bottom();
  if (index < 1 || index > c.size()) {
    throw RangeError("block index " + std::to_string(index) + " out of range");
  }
  int first = 1;
  for (int b = 0; b + 1 < index; ++b) first += c[b];
  return {first, first + c[index - 1] - 1};
}

SeaweedShape seaweed_shape(const SeaweedType& t) {
  SeaweedShape shape;
  shape.n = t.n();
  shape.cartan_dim = t.n() - 1;
  const std::vector<int> top_block = block_of(t.top());
  const std::vector<int> bottom_block = block_of(t.bottom());
  for (int i = 1; i <= shape.n; ++i) {
    for (int j = 1; j <= shape.n; ++j) {
      if (i == j) continue;
      const bool ok = i > j ? top_block[static_cast<size_t>(i)] == top_block[static_cast<size_t>(j)]
                            : bottom_block[static_cast<size_t>(i)] == bottom_block[static_cast<size_t>(j)];
      if (ok) shape.admissible.emplace_back(i, j);
    }
  }
  return shape;
}

PathMeasures::PathMeasures(const DirectedMeander& dm, int reference_vertex) {
  const int n = dm.n();
  if (reference_vertex == 0) reference_vertex = n;
  if (reference_vertex < 1 || reference_vertex > n) {
    throw RangeError("reference vertex out of range");
  }
  reference_ = reference_vertex;

  // Measure from the walk's starting endpoint to each vertex.
  std::vector<long long> from_start(static_cast<size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);

  if (n > 1) {
    int start = 0;
    for (int v = 1; v <= n && start == 0; ++v) {
      if (dm.degree(v) == 1) start = v;
    }
    if (start == 0) throw NotFrobeniusError("meander has no path endpoint");

    int cur = start;
    visited[static_cast<size_t>(cur)] = 1;
    bool came_from_top = dm.top_partner(cur) == 0;
    int count = 1;
    while (true) {
      const int next = came_from_top ? dm.bottom_partner(cur) : dm.top_partner(cur);
      if (next == 0) break;
      // Top edges point high to low, bottom edges low to high; traversing an
      // edge with its direction counts +1, against it -1.
      const long long sign = came_from_top ? (cur < next ? 1 : -1) : (cur > next ? 1 : -1);
      from_start[static_cast<size_t>(next)] = from_start[static_cast<size_t>(cur)] + sign;
      visited[static_cast<size_t>(next)] = 1;
      cur = next;
      came_from_top = !came_from_top;
      ++count;
    }
    if (count != n) {
      throw NotFrobeniusError("meander is not a single path");
    }
  }

  raw_.assign(static_cast<size_t>(n) + 1, 0);
  const long long at_ref = from_start[static_cast<size_t>(reference_vertex)];
  for (int v = 1; v <= n; ++v) {
    raw_[static_cast<size_t>(v)] = at_ref - from_start[static_cast<size_t>(v)];
  }
  raw_[0] = 0;
}

long long measure(const DirectedMeander& dm, int i, int j) {
  PathMeasures pm(dm);
  if (i < 1 || i > dm.n() || j < 1 || j > dm.n()) throw RangeError("vertex out of range");
  return pm.measure(i, j);
}

PrincipalElement principal_element(const DirectedMeander& dm, int reference_vertex) {
  PathMeasures pm(dm, reference_vertex);
  const int n = dm.n();

  PrincipalElement out;
  out.reference_vertex = pm.reference_vertex();
  out.raw_measures.reserve(static_cast<size_t>(n));
  long long sum = 0;
  for (int v = 1; v <= n; ++v) {
    out.raw_measures.push_back(pm.raw()[static_cast<size_t>(v)]);
    sum += pm.raw()[static_cast<size_t>(v)];
  }
  const Rational shift(-sum, n);
  out.diag.reserve(static_cast<size_t>(n));
  Rational trace = 0;
  for (long long d : out.raw_measures) {
    out.diag.push_back(Rational(d) + shift);
    trace += out.diag.back();
  }
  if (trace != 0) throw InternalError("principal element trace is nonzero");
  return out;
}

void SpectrumMultiset::add(long long value, long long multiplicity) {
  if (multiplicity == 0) return;
  counts[value] += multiplicity;
  if (counts[value] == 0) counts.erase(value);
  total += multiplicity;
}

long long SpectrumMultiset::multiplicity(long long value) const {
  auto it = counts.find(value);
  return it == counts.end() ? 0 : it->second;
}

SpectrumMultiset merge(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  SpectrumMultiset out = a;
  for (auto [value, mult] : b.counts) out.add(value, mult);
  return out;
}

SpectrumMultiset spectrum_from_measures(const PathMeasures& pm, const SeaweedShape& shape) {
  SpectrumMultiset out;
  for (auto [i, j] : shape.admissible) out.add(pm.measure(i, j));
  out.add(0, shape.cartan_dim);
  if (out.total != shape.dimension()) throw InternalError("spectrum size mismatch");
  return out;
}

SpectrumMultiset spectrum(const SeaweedType& t) {
  DirectedMeander dm = directed_meander(t);
  PathMeasures pm(dm);
  return spectrum_from_measures(pm, seaweed_shape(t));
}

SpectrumMultiset block_contribution(const DirectedMeander& dm, BlockSide side, int index) {
  const bool top = side == BlockSide::Top;
  auto [first, last] = block_range(dm.type(), top, index);
  PathMeasures pm(dm);

  SpectrumMultiset out;
  for (int a = first; a <= last; ++a) {
    for (int b = a + 1; b <= last; ++b) {
      // Top blocks contribute the downward pairs, bottom blocks the upward.
      out.add(top ? pm.measure(b, a) : pm.measure(a, b));
    }
  }
  out.add(0, (last - first + 1) / 2);
  return out;
}

BlockSets sigma_tau(const DirectedMeander& dm, int j, int p) {
  if (j < 1 || p > dm.n() || j > p) throw RangeError("invalid vertex range");
  PathMeasures pm(dm);

  BlockSets out;
  for (int i = j; i <= p; ++i) {
    for (int k = j; k <= i; ++k) {
      out.sigma_left.insert(pm.measure(i, k));
      out.sigma_right.insert(pm.measure(k, i));
    }
    out.tau_left.insert(pm.measure(i, j));
    out.tau_right.insert(pm.measure(i, p));
  }
  return out;
}

namespace {

struct SimpleSlots {
  // slot[i] holds m(i+1,i) (top) or m(i,i+1) (bottom) once known.
  std::vector<std::optional<long long>> top;
  std::vector<std::optional<long long>> bottom;
  std::vector<char> top_exists;
  std::vector<char> bottom_exists;
};

SimpleSlots make_slots(const DirectedMeander& dm) {
  const int n = dm.n();
  SimpleSlots s;
  s.top.assign(static_cast<size_t>(n), std::nullopt);
  s.bottom.assign(static_cast<size_t>(n), std::nullopt);
  s.top_exists.assign(static_cast<size_t>(n), 0);
  s.bottom_exists.assign(static_cast<size_t>(n), 0);
  const std::vector<int> tb = block_of(dm.type().top());
  const std::vector<int> bb = block_of(dm.type().bottom());
  for (int i = 1; i < n; ++i) {
    if (tb[static_cast<size_t>(i)] == tb[static_cast<size_t>(i) + 1]) s.top_exists[static_cast<size_t>(i)] = 1;
    if (bb[static_cast<size_t>(i)] == bb[static_cast<size_t>(i) + 1]) s.bottom_exists[static_cast<size_t>(i)] = 1;
  }
  return s;
}

}  // namespace

SimpleEigenvalues simple_eigenvalues_by_measure(const DirectedMeander& dm) {
  PathMeasures pm(dm);
  SimpleSlots slots = make_slots(dm);
  SimpleEigenvalues out;
  for (int i = 1; i < dm.n(); ++i) {
    if (slots.top_exists[static_cast<size_t>(i)]) out.top[i] = pm.measure(i + 1, i);
    if (slots.bottom_exists[static_cast<size_t>(i)]) out.bottom[i] = pm.measure(i, i + 1);
  }
  return out;
}

SimpleEigenvalues simple_eigenvalues_by_propagation(const DirectedMeander& dm) {
  // The walk below is only used to reject non-Frobenius input.
  PathMeasures guard(dm);
  const int n = dm.n();
  SimpleSlots s = make_slots(dm);

  // Each arc relates the adjacent pairs just inside its endpoints: an arc of
  // span 1 pins the value 1, span 2 makes the two inner values sum to 1, and
  // span >= 3 makes the two innermost values negatives of each other.
  struct PairRule {
    bool top;
    int left;   // slot index at the arc's left end
    int right;  // slot index just inside the arc's right end
    bool sum_to_one;
  };
  std::vector<PairRule> rules;
  auto add_arcs = [&rules, &s](const std::vector<std::pair<int, int>>& edges, bool top) {
    for (auto [a, b] : edges) {
      const int lo = a < b ? a : b;
      const int hi = a < b ? b : a;
      const int span = hi - lo;
      if (span == 1) {
        auto& slot = top ? s.top[static_cast<size_t>(lo)] : s.bottom[static_cast<size_t>(lo)];
        slot = 1;
      } else if (span == 2) {
        rules.push_back(PairRule{top, lo, lo + 1, true});
      } else {
        rules.push_back(PairRule{top, lo, hi - 1, false});
      }
    }
  };
  add_arcs(dm.top_edges(), true);
  add_arcs(dm.bottom_edges(), false);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const PairRule& r : rules) {
      auto& side = r.top ? s.top : s.bottom;
      auto& a = side[static_cast<size_t>(r.left)];
      auto& b = side[static_cast<size_t>(r.right)];
      if (a.has_value() == b.has_value()) continue;
      const long long known = a ? *a : *b;
      const long long inferred = r.sum_to_one ? 1 - known : -known;
      (a ? b : a) = inferred;
      changed = true;
    }
    // Adjacent pair in one top and one bottom block at once: the two
    // measures are opposite.
    for (int i = 1; i < n; ++i) {
      if (!s.top_exists[static_cast<size_t>(i)] || !s.bottom_exists[static_cast<size_t>(i)]) continue;
      auto& a = s.top[static_cast<size_t>(i)];
      auto& b = s.bottom[static_cast<size_t>(i)];
      if (a.has_value() == b.has_value()) continue;
      (a ? b : a) = -(a ? *a : *b);
      changed = true;
    }
  }

  SimpleEigenvalues out;
  for (int i = 1; i < n; ++i) {
    if (s.top_exists[static_cast<size_t>(i)]) {
      if (!s.top[static_cast<size_t>(i)]) {
        throw PropagationError("undetermined simple eigenvalue at top pair " + std::to_string(i));
      }
      out.top[i] = *s.top[static_cast<size_t>(i)];
    }
    if (s.bottom_exists[static_cast<size_t>(i)]) {
      if (!s.bottom[static_cast<size_t>(i)]) {
        throw PropagationError("undetermined simple eigenvalue at bottom pair " + std::to_string(i));
      }
      out.bottom[i] = *s.bottom[static_cast<size_t>(i)];
    }
  }
  (void)guard;
  return out;
}

SimpleEigenvalues simple_eigenvalues(const DirectedMeander& dm) {
  SimpleEigenvalues by_measure = simple_eigenvalues_by_measure(dm);
  SimpleEigenvalues by_propagation = simple_eigenvalues_by_propagation(dm);
  if (!(by_measure == by_propagation)) {
    throw InternalError("simple eigenvalue routes disagree");
  }
  return by_measure;
}

}  // namespace seaweed
