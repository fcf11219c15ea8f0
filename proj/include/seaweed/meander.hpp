#pragma once

#include <utility>
#include <vector>

#include "seaweed/types.hpp"

namespace seaweed {

// Unordered arc between two of the meander's vertices, stored with lo < hi.
struct Arc {
  int lo = 0;
  int hi = 0;
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Planar graph on n collinear 1-indexed vertices. Each block of the top
// composition contributes nested arcs above the line, pairing its first and
// last vertex inward; bottom blocks do the same below the line. Every vertex
// meets at most one top and one bottom arc.
class Meander {
 public:
  Meander(SeaweedType type, std::vector<Arc> top_arcs, std::vector<Arc> bottom_arcs);

  int n() const { return type_.n(); }
  const SeaweedType& type() const { return type_; }
  const std::vector<Arc>& top_arcs() const { return top_arcs_; }
  const std::vector<Arc>& bottom_arcs() const { return bottom_arcs_; }

  // Opposite endpoint of v's top/bottom arc, or 0 if v has none.
  int top_partner(int v) const { return top_partner_[static_cast<size_t>(v)]; }
  int bottom_partner(int v) const { return bottom_partner_[static_cast<size_t>(v)]; }
  int degree(int v) const {
    return (top_partner(v) != 0 ? 1 : 0) + (bottom_partner(v) != 0 ? 1 : 0);
  }

 private:
  SeaweedType type_;
  std::vector<Arc> top_arcs_;
  std::vector<Arc> bottom_arcs_;
  std::vector<int> top_partner_;     // 1-indexed; [0] unused
  std::vector<int> bottom_partner_;
};

Meander build_meander(const SeaweedType& t);

// The meander with its canonical orientation: top arcs point from the higher
// to the lower vertex, bottom arcs from the lower to the higher. The edge set
// is the support of the seaweed's Dergachev-Kirillov functional.
class DirectedMeander {
 public:
  DirectedMeander(SeaweedType type, std::vector<std::pair<int, int>> top_edges,
                  std::vector<std::pair<int, int>> bottom_edges);

  int n() const { return type_.n(); }
  const SeaweedType& type() const { return type_; }
  const std::vector<std::pair<int, int>>& top_edges() const { return top_edges_; }
  const std::vector<std::pair<int, int>>& bottom_edges() const { return bottom_edges_; }
  // Top edges first, then bottom edges.
  std::vector<std::pair<int, int>> all_edges() const;

  int top_partner(int v) const { return top_partner_[static_cast<size_t>(v)]; }
  int bottom_partner(int v) const { return bottom_partner_[static_cast<size_t>(v)]; }
  int degree(int v) const {
    return (top_partner(v) != 0 ? 1 : 0) + (bottom_partner(v) != 0 ? 1 : 0);
  }

 private:
  SeaweedType type_;
  std::vector<std::pair<int, int>> top_edges_;
  std::vector<std::pair<int, int>> bottom_edges_;
  std::vector<int> top_partner_;
  std::vector<int> bottom_partner_;
};

DirectedMeander orient(const Meander& m);

// Convenience for the common pipeline step.
DirectedMeander directed_meander(const SeaweedType& t);

struct Component {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  // Paths run from their smaller endpoint to the other end; cycles start at
  // their smallest vertex and continue toward its smaller neighbour.
  std::vector<int> vertices;
  bool operator==(const Component&) const = default;
};

struct ComponentReport {
  int paths = 0;
  int cycles = 0;
  std::vector<Component> components;  // ordered by smallest contained vertex
};

// Partition of the vertices into maximal connected pieces. A component is a
// cycle exactly when all its vertices have degree 2; isolated vertices count
// as paths.
ComponentReport components(const Meander& m);

// True when the meander is one path through all n vertices.
bool is_frobenius(const Meander& m);

// 2*cycles + paths - 1. Equals the kernel dimension of the Kirillov form of
// the Dergachev-Kirillov functional; the equality is enforced against the
// exact-arithmetic oracle in the test suite.
int graph_index(const Meander& m);

}  // namespace seaweed
