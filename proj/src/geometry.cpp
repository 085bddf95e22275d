#include "vpgmis/geometry.hpp"

#include <cstdlib>
#include <unordered_set>

namespace vpgmis {

namespace {

// Axis of a segment between distinct axis-parallel endpoints: 0 = horizontal,
// 1 = vertical, -1 = neither (diagonal or zero-length).
int segment_axis(const GridPoint& a, const GridPoint& b) {
    const bool dx = a.x != b.x;
    const bool dy = a.y != b.y;
    if (dx && !dy) return 0;
    if (!dx && dy) return 1;
    return -1;
}

int segment_length(const GridPoint& a, const GridPoint& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

}  // namespace

int GridPath::max_segment_length() const {
    int best = 0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        best = std::max(best, segment_length(vertices[i], vertices[i + 1]));
    return best;
}

const char* violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DiagonalSegment: return "DiagonalSegment";
        case ViolationKind::ZeroLengthSegment: return "ZeroLengthSegment";
        case ViolationKind::CollinearBreakpoint: return "CollinearBreakpoint";
        case ViolationKind::TooManyBends: return "TooManyBends";
        case ViolationKind::SelfIntersecting: return "SelfIntersecting";
        case ViolationKind::OutOfBounds: return "OutOfBounds";
    }
    return "Unknown";
}

std::string Violation::describe() const {
    std::string s = violation_name(kind);
    if (kind == ViolationKind::TooManyBends) {
        s += "(" + std::to_string(found) + "," + std::to_string(allowed) + ")";
    }
    s += " at vertex " + std::to_string(vertex_index);
    return s;
}

ValidationResult validate_path(const GridPath& path, int k, const BoundingBox& box) {
    ValidationResult result;
    const auto& v = path.vertices;

    // A path with no vertices has no location at all. Flag it as degenerate
    // so it can never reach the LP, where a positive-weight variable outside
    // every constraint would make the relaxation unbounded.
    if (v.empty()) {
        result.violations.push_back({ViolationKind::ZeroLengthSegment, 0});
        return result;
    }

    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].x < 0 || v[i].x > box.width || v[i].y < 0 || v[i].y > box.height)
            result.violations.push_back({ViolationKind::OutOfBounds, static_cast<int>(i)});
    }

    // Per-segment shape checks. Track which segments are well-formed so the
    // collinearity and simplicity passes only look at usable geometry.
    std::vector<bool> segment_ok(v.size() >= 2 ? v.size() - 1 : 0, true);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == v[i + 1]) {
            result.violations.push_back({ViolationKind::ZeroLengthSegment, static_cast<int>(i)});
            segment_ok[i] = false;
        } else if (segment_axis(v[i], v[i + 1]) < 0) {
            result.violations.push_back({ViolationKind::DiagonalSegment, static_cast<int>(i)});
            segment_ok[i] = false;
        }
    }

    // A listed interior vertex must be a true bend.
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        if (!segment_ok[i - 1] || !segment_ok[i]) continue;
        if (segment_axis(v[i - 1], v[i]) == segment_axis(v[i], v[i + 1]))
            result.violations.push_back({ViolationKind::CollinearBreakpoint, static_cast<int>(i)});
    }

    const int bends = path.bend_count();
    if (bends > k) {
        // Offending vertex: the first bend beyond the budget.
        result.violations.push_back({ViolationKind::TooManyBends, k + 1, bends, k});
    }

    // Simplicity: walk the lattice points and reject any revisit. Only
    // meaningful when every segment is axis-parallel.
    bool walkable = true;
    for (bool ok : segment_ok) walkable = walkable && ok;
    if (walkable && !v.empty()) {
        std::unordered_set<uint64_t> seen;
        seen.insert(v[0].key());
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            GridPoint p = v[i];
            const int sx = (v[i + 1].x > p.x) ? 1 : (v[i + 1].x < p.x ? -1 : 0);
            const int sy = (v[i + 1].y > p.y) ? 1 : (v[i + 1].y < p.y ? -1 : 0);
            bool clash = false;
            while (p != v[i + 1]) {
                p.x += sx;
                p.y += sy;
                if (!seen.insert(p.key()).second) clash = true;
            }
            if (clash)
                result.violations.push_back({ViolationKind::SelfIntersecting, static_cast<int>(i)});
        }
    }

    return result;
}

std::vector<GridPoint> grid_points(const GridPath& path) {
    std::vector<GridPoint> points;
    const auto& v = path.vertices;
    if (v.empty()) return points;

    points.push_back(v[0]);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        GridPoint p = v[i];
        const int sx = (v[i + 1].x > p.x) ? 1 : (v[i + 1].x < p.x ? -1 : 0);
        const int sy = (v[i + 1].y > p.y) ? 1 : (v[i + 1].y < p.y ? -1 : 0);
        while (p != v[i + 1]) {
            p.x += sx;
            p.y += sy;
            points.push_back(p);
        }
    }
    return points;
}

}  // namespace vpgmis
