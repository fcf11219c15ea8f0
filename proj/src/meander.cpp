#include "seaweed/meander.hpp"

#include <algorithm>

namespace seaweed {

namespace {

std::vector<int> partner_table(int n, const std::vector<Arc>& arcs) {
  std::vector<int> partner(static_cast<size_t>(n) + 1, 0);
  for (const Arc& a : arcs) {
    if (a.lo < 1 || a.hi > n || a.lo >= a.hi) throw InternalError("arc out of range");
    if (partner[static_cast<size_t>(a.lo)] != 0 || partner[static_cast<size_t>(a.hi)] != 0) {
      throw InternalError("vertex incident to two arcs on the same side");
    }
    partner[static_cast<size_t>(a.lo)] = a.hi;
    partner[static_cast<size_t>(a.hi)] = a.lo;
  }
  return partner;
}

}  // namespace

Meander::Meander(SeaweedType type, std::vector<Arc> top_arcs, std::vector<Arc> bottom_arcs)
    : type_(std::move(type)), top_arcs_(std::move(top_arcs)), bottom_arcs_(std::move(bottom_arcs)) {
  top_partner_ = partner_table(n(), top_arcs_);
  bottom_partner_ = partner_table(n(), bottom_arcs_);
}

namespace {

// Arcs of one side: within a block spanning [offset+1 .. offset+size], vertex
// pairs {j,k} with j + k = 2*offset + size + 1.
void block_arcs(const Composition& c, std::vector<Arc>& out) {
  int offset = 0;
  for (int b = 0; b < c.size(); ++b) {
    int size = c[b];
    for (int i = 1; 2 * i < size + 1; ++i) {
      out.push_back(Arc{offset + i, offset + size + 1 - i});
    }
    offset += size;
  }
}

}  // namespace

Meander build_meander(const SeaweedType& t) {
  std::vector<Arc> top;
  std::vector<Arc> bottom;
  block_arcs(t.top(), top);
  block_arcs(t.bottom(), bottom);
  return Meander(t, std::move(top), std::move(bottom));
}

DirectedMeander::DirectedMeander(SeaweedType type, std::vector<std::pair<int, int>> top_edges,
                                 std::vector<std::pair<int, int>> bottom_edges)
    : type_(std::move(type)),
      top_edges_(std::move(top_edges)),
      bottom_edges_(std::move(bottom_edges)) {
  std::vector<Arc> top;
  std::vector<Arc> bottom;
  top.reserve(top_edges_.size());
  bottom.reserve(bottom_edges_.size());
  for (auto [hi, lo] : top_edges_) {
    if (hi <= lo) throw InternalError("top edge must point from high to low");
    top.push_back(Arc{lo, hi});
  }
  for (auto [lo, hi] : bottom_edges_) {
    if (lo >= hi) throw InternalError("bottom edge must point from low to high");
    bottom.push_back(Arc{lo, hi});
  }
  top_partner_ = partner_table(n(), top);
  bottom_partner_ = partner_table(n(), bottom);
}

std::vector<std::pair<int, int>> DirectedMeander::all_edges() const {
  std::vector<std::pair<int, int>> out = top_edges_;
  out.insert(out.end(), bottom_edges_.begin(), bottom_edges_.end());
  return out;
}

DirectedMeander orient(const Meander& m) {
  std::vector<std::pair<int, int>> top;
  std::vector<std::pair<int, int>> bottom;
  top.reserve(m.top_arcs().size());
  bottom.reserve(m.bottom_arcs().size());
  for (const Arc& a : m.top_arcs()) top.emplace_back(a.hi, a.lo);
  for (const Arc& a : m.bottom_arcs()) bottom.emplace_back(a.lo, a.hi);
  return DirectedMeander(m.type(), std::move(top), std::move(bottom));
}

DirectedMeander directed_meander(const SeaweedType& t) { return orient(build_meander(t)); }

ComponentReport components(const Meander& m) {
  const int n = m.n();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  ComponentReport report;

  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;

    // Collect the component and find its smallest degree-<2 vertex, if any.
    std::vector<int> stack{start};
    std::vector<int> members;
    visited[static_cast<size_t>(start)] = 1;
    bool all_degree_two = true;
    int min_endpoint = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      if (m.degree(v) < 2) {
        all_degree_two = false;
        if (min_endpoint == 0 || v < min_endpoint) min_endpoint = v;
      }
      for (int w : {m.top_partner(v), m.bottom_partner(v)}) {
        if (w != 0 && !visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }

    Component comp;
    comp.kind = all_degree_two ? Component::Kind::Cycle : Component::Kind::Path;

    // Walk the component in canonical order. Consecutive edges alternate
    // between the two sides, so tracking the last side used is enough.
    int first = all_degree_two ? *std::min_element(members.begin(), members.end())
                               : min_endpoint;
    comp.vertices.push_back(first);
    int cur = first;
    bool came_from_top = false;
    if (all_degree_two) {
      // Enter the cycle toward the smaller of the two neighbours.
      int via_top = m.top_partner(cur);
      int via_bottom = m.bottom_partner(cur);
      int next = std::min(via_top, via_bottom);
      came_from_top = next == via_top;
      cur = next;
      comp.vertices.push_back(cur);
    } else {
      came_from_top = m.top_partner(cur) == 0;  // pretend we arrived via the missing side
    }
    while (true) {
      int next = came_from_top ? m.bottom_partner(cur) : m.top_partner(cur);
      if (next == 0 || next == first) break;
      cur = next;
      came_from_top = !came_from_top;
      comp.vertices.push_back(cur);
    }

    if (comp.vertices.size() != members.size()) {
      throw InternalError("component walk did not visit every member");
    }
    if (comp.kind == Component::Kind::Cycle) ++report.cycles;
    else ++report.paths;
    report.components.push_back(std::move(comp));
  }
  return report;
}

bool is_frobenius(const Meander& m) {
  ComponentReport r = components(m);
  return r.paths == 1 && r.cycles == 0;
}

int graph_index(const Meander& m) {
  ComponentReport r = components(m);
  return 2 * r.cycles + r.paths - 1;
}

}  // namespace seaweed
