#pragma once

#include <string>
#include <vector>

#include "twosq/geometry.hpp"
#include "twosq/one_square.hpp"

namespace twosq {

struct SvgScene {
    std::vector<Segment> segments;
    std::vector<Square> squares;
    bool show_frame = true;      // frame rectangle, lambda lines, violators
    std::vector<Locus> loci;     // drawn as polylines
    int width = 800;
};

// SVG document of the scene.  The y axis points up, as in the usual drawings
// of these configurations, so the output is mirrored relative to SVG's
// default screen coordinates.
std::string render_svg(const SvgScene& scene);

}  // namespace twosq
