#pragma once

#include <string>

#include "tilekit/wheels.hpp"

namespace tilekit {

struct SvgStyle {
    double fill_opacity = 0.12;
    double stroke_width = 0.02;
    bool mark_lattice = false;
};

/**
 * Deterministic SVG for a patch: one path per translate (in the patch's
 * sorted translate order), optional lattice markers, viewBox from the window.
 * Coordinates are the only lossy surface, fixed at six decimals; identical
 * patches yield byte-identical output.
 */
std::string render_svg(const Patch& patch, const SvgStyle& style = {});

}  // namespace tilekit
