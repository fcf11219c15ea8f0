#include "seaweed/render.hpp"

#include <cstdlib>
#include <sstream>

namespace seaweed {

namespace {

void dot_header(std::ostringstream& out, bool directed, const SeaweedType& t, int n) {
  out << (directed ? "digraph" : "graph") << " meander {\n";
  out << "  label=\"" << format_type(t) << "\";\n";
  out << "  rankdir=LR;\n";
  for (int v = 1; v <= n; ++v) out << "  v" << v << ";\n";
}

constexpr int kUnit = 40;  // pixels per vertex gap
constexpr int kMargin = 30;

void svg_open(std::ostringstream& out, int n) {
  // Tallest possible arc is a semicircle over the full vertex line.
  const int half = kMargin + kUnit * (n - 1) / 2;
  const int width = 2 * kMargin + kUnit * (n > 1 ? n - 1 : 1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << 2 * half << "\" viewBox=\"" << -kMargin << " " << -half << " " << width << " "
      << 2 * half << "\">\n";
}

int svg_x(int v) { return (v - 1) * kUnit; }

// Semicircle from vertex a to vertex b; above the baseline when up.
void svg_arc(std::ostringstream& out, int a, int b, bool up, bool arrow) {
  const int x1 = svg_x(a);
  const int x2 = svg_x(b);
  const double r = std::abs(x2 - x1) / 2.0;
  // sweep flag: above-line arcs bow up, below-line arcs bow down.
  const int sweep = (up == (x1 < x2)) ? 0 : 1;
  out << "  <path d=\"M " << x1 << " 0 A " << r << " " << r << " 0 0 " << sweep << " " << x2
      << " 0\" fill=\"none\" stroke=\"black\"";
  if (arrow) out << " marker-end=\"url(#arrow)\"";
  out << "/>\n";
}

void svg_vertices(std::ostringstream& out, int n) {
  for (int v = 1; v <= n; ++v) {
    out << "  <circle cx=\"" << svg_x(v) << "\" cy=\"0\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << svg_x(v) << "\" y=\"14\" font-size=\"9\" text-anchor=\"middle\">v"
        << v << "</text>\n";
  }
}

void svg_arrow_marker(std::ostringstream& out) {
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
}

}  // namespace

std::string to_dot(const Meander& m) {
  std::ostringstream out;
  dot_header(out, false, m.type(), m.n());
  for (const Arc& a : m.top_arcs()) {
    out << "  v" << a.lo << " -- v" << a.hi << " [label=\"top\"];\n";
  }
  for (const Arc& a : m.bottom_arcs()) {
    out << "  v" << a.lo << " -- v" << a.hi << " [label=\"bottom\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DirectedMeander& dm) {
  std::ostringstream out;
  dot_header(out, true, dm.type(), dm.n());
  for (auto [from, to] : dm.top_edges()) {
    out << "  v" << from << " -> v" << to << " [label=\"top\"];\n";
  }
  for (auto [from, to] : dm.bottom_edges()) {
    out << "  v" << from << " -> v" << to << " [label=\"bottom\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const Meander& m) {
  std::ostringstream out;
  svg_open(out, m.n());
  for (const Arc& a : m.top_arcs()) svg_arc(out, a.lo, a.hi, true, false);
  for (const Arc& a : m.bottom_arcs()) svg_arc(out, a.lo, a.hi, false, false);
  svg_vertices(out, m.n());
  out << "</svg>\n";
  return out.str();
}

std::string to_svg(const DirectedMeander& dm) {
  std::ostringstream out;
  svg_open(out, dm.n());
  svg_arrow_marker(out);
  for (auto [from, to] : dm.top_edges()) svg_arc(out, from, to, true, true);
  for (auto [from, to] : dm.bottom_edges()) svg_arc(out, from, to, false, true);
  svg_vertices(out, dm.n());
  out << "</svg>\n";
  return out.str();
}

}  // namespace seaweed
