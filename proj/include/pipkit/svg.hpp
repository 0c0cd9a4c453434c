#pragma once

#include <string>

#include "pipkit/polygon.hpp"

namespace pipkit {

struct SvgStyle {
    long unit = 40;    // pixels per lattice step
    long margin = 1;   // extra lattice rows/columns around the bounding box
};

// Static SVG 1.1 figure: unit lattice dots, the shaded polygon, boundary lattice
// points in red and interior lattice points in black.
std::string render_svg(const RationalPolygon& p, const SvgStyle& style = {});

}  // namespace pipkit
