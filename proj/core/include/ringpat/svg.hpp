#pragma once

#include <string>

#include "ringpat/layout.hpp"

namespace ringpat {

struct RenderOptions {
    double stroke_width = 1.0;  ///< in output pixels
    std::string positive_color = "#f28e2b";
    std::string negative_color = "#e377c2";
    bool show_inner = true;
    bool show_outer = true;
    bool show_touching_points = false;
    double size = 800.0;  ///< width and height of the canvas
    double margin = 20.0;
};

/// SVG document with one inner and one outer circle per ring, colored by the
/// sign of r. A ring with r = 0 is drawn as a dot at its center. Output is
/// deterministic for a given pattern and options.
std::string render_svg(const PlanarPattern& pattern, const RenderOptions& opts = {});

}  // namespace ringpat
