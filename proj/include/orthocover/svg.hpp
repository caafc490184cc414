#pragma once

#include <optional>
#include <string>

#include "orthocover/cover.hpp"
#include "orthocover/polygon.hpp"

namespace orthocover {

struct RenderSpec {
    int scale = 20;  // pixels per unit, at least 1
    bool show_polygon = true;
    bool show_cover = true;
    bool show_grid = true;  // only drawn when the polygon area is at most 4096
    bool show_labels = true;
};

// Deterministic SVG 1.1 document; y grows upwards as in the plane.
// Packs are drawn as single rectangles labelled with their strength.
std::string render_svg(const Polygon& p, const Cover* cover, const RenderSpec& spec = {});

}  // namespace orthocover
