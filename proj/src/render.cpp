#include "vpgmis/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vpgmis {

namespace {

const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
};
constexpr int kPaletteSize = 10;

}  // namespace

std::string render_svg(const Instance& instance, const RenderOptions& options) {
    std::set<int> highlight(options.highlight_ids.begin(), options.highlight_ids.end());
    for (int id : highlight) {
        if (!instance.position_of(id))
            throw std::invalid_argument("unknown highlight id " + std::to_string(id));
    }

    int x0 = 0, y0 = 0, x1 = 10, y1 = 10;
    if (!instance.paths.empty()) {
        x0 = y0 = INT32_MAX;
        x1 = y1 = INT32_MIN;
        for (const auto& path : instance.paths) {
            for (const auto& v : path.vertices) {
                x0 = std::min(x0, v.x);
                y0 = std::min(y0, v.y);
                x1 = std::max(x1, v.x);
                y1 = std::max(y1, v.y);
            }
        }
    }

    const int units_w = x1 - x0 + 2;
    const int units_h = y1 - y0 + 2;
    const double px = std::clamp(900.0 / std::max(units_w, units_h), 4.0, 48.0);
    // Flip y so the drawing reads with the y axis pointing up.
    auto fy = [&](int y) { return y0 + y1 - y; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (x0 - 1) << " "
        << (y0 - 1) << " " << units_w << " " << units_h << "\" width=\""
        << static_cast<int>(units_w * px) << "\" height=\""
        << static_cast<int>(units_h * px) << "\">\n";
    out << "  <rect x=\"" << (x0 - 1) << "\" y=\"" << (y0 - 1) << "\" width=\""
        << units_w << "\" height=\"" << units_h << "\" fill=\"#ffffff\"/>\n";

    // Lattice lines; skipped when the box is too large to stay readable.
    if (units_w <= 256 && units_h <= 256) {
        out << "  <g stroke=\"#d8d8d8\" stroke-width=\"0.03\">\n";
        for (int gx = x0; gx <= x1; ++gx)
            out << "    <line x1=\"" << gx << "\" y1=\"" << (y0 - 1) << "\" x2=\"" << gx
                << "\" y2=\"" << (y1 + 1) << "\"/>\n";
        for (int gy = y0; gy <= y1; ++gy)
            out << "    <line x1=\"" << (x0 - 1) << "\" y1=\"" << gy << "\" x2=\""
                << (x1 + 1) << "\" y2=\"" << gy << "\"/>\n";
        out << "  </g>\n";
    }

    for (int pos = 0; pos < instance.n(); ++pos) {
        const auto& path = instance.paths[pos];
        const bool selected = highlight.count(path.id) > 0;
        const char* color = kPalette[pos % kPaletteSize];
        const char* width = selected ? "0.36" : "0.14";
        const char* opacity = selected ? "1.0" : "0.75";

        if (path.vertices.size() == 1) {
            out << "  <circle cx=\"" << path.vertices[0].x << "\" cy=\""
                << fy(path.vertices[0].y) << "\" r=\"" << (selected ? "0.34" : "0.22")
                << "\" fill=\"" << color << "\" fill-opacity=\"" << opacity << "\"/>\n";
            continue;
        }

        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
            << width << "\" stroke-opacity=\"" << opacity
            << "\" stroke-linecap=\"square\" stroke-linejoin=\"miter\" points=\"";
        for (size_t i = 0; i < path.vertices.size(); ++i) {
            if (i) out << " ";
            out << path.vertices[i].x << "," << fy(path.vertices[i].y);
        }
        out << "\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace vpgmis
