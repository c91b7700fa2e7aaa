#pragma once

#include <string>

#include "wsg/int_tuple.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

/// SVG scatter of the members in a 2-dimensional box: open circles for
/// maximal elements, filled dots for the rest, alpha_1 to the right and
/// alpha_2 upward.  Throws std::invalid_argument unless m = 2.
std::string plot_svg(const Semigroup& sg, const Box& box);

}  // namespace wsg
