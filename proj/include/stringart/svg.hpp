#pragma once

#include "stringart/net.hpp"

#include <string>
#include <vector>

namespace stringart {

struct RenderOptions {
    int width_px = 1000; // >= 100
    bool checkered = false;
    bool show_envelope = false;
    bool show_vertices = false;
    // Quadrilateral fill, indexed by diagonal (j - i) mod palette size.
    // Must be non-empty when checkered.
    std::vector<std::string> palette{"#dce6f2", "#f2e4dc", "#e4f2dc"};
    std::string boundary_fill = "#f2d0d0";
    std::string line_color = "#333333";
};

// Exactly six decimals, round half to even. Every numeric attribute in the
// SVG goes through this, so output bytes are a pure function of the input.
std::string format_decimal(const Rational& value);

// SVG 1.1 document. Element order: quad polygons by (i, j), boundary
// triangles by i, lines l_0..l_N, vertex circles by (i, j), envelope
// polyline. The right frame maps the unit square to width_px; other frames
// get a bounding box over intercepts and vertices with a 5% margin.
std::string render(const Net& net, const RenderOptions& options = {});

} // namespace stringart
