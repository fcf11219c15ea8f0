#pragma once

#include <string>

#include "seaweed/meander.hpp"

namespace seaweed {

// Graphviz form; arcs carry a top/bottom label.
std::string to_dot(const Meander& m);
std::string to_dot(const DirectedMeander& dm);

// Vertices on a horizontal line at unit spacing, top arcs drawn as
// semicircles above, bottom arcs below; the directed form adds arrowheads.
std::string to_svg(const Meander& m);
std::string to_svg(const DirectedMeander& dm);

}  // namespace seaweed
