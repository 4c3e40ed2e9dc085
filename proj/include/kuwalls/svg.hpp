#pragma once

#include "kuwalls/walls.hpp"

#include <string>

namespace kuwalls {

/// Static SVG 1.1 picture of the (beta, alpha) half-plane: semicircular walls,
/// the line beta = beta0 and one label per chamber along it. This is the only
/// place rationals are converted to floating point.
std::string render_wall_diagram(const ChamberReport& report, const std::string& title);

}  // namespace kuwalls
