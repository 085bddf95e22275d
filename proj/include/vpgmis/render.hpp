// Static SVG rendering of an instance: the grid, each path as a colored
// axis-parallel polyline, selected paths stroked heavier.
#pragma once

#include "vpgmis/instance.hpp"

#include <string>
#include <vector>

namespace vpgmis {

struct RenderOptions {
    std::vector<int> highlight_ids;  // e.g. a solve report's selected set
};

// Throws std::invalid_argument on a highlight id that is not in the
// instance. The output is self-contained SVG, y axis pointing up.
std::string render_svg(const Instance& instance, const RenderOptions& options = {});

}  // namespace vpgmis
