#pragma once

#include <string>

#include "fewnomial/solver.hpp"

namespace fewnomial {

/// Render a solved instance as a standalone SVG 1.1 document. k = 2 draws the
/// dual plane: wall lines, traced curve arcs by level, certified chain zeros,
/// master solutions, and a legend carrying the itemized budget next to the
/// observed counts. k = 1 draws the dual number line with alternating chamber
/// shading, wall ticks, and the counted solutions. k > 2 is rejected.
/// The layout is a pure function of the report, so reruns are byte-identical.
std::string render_svg(const SparseSolveReport& rep);

}  // namespace fewnomial
