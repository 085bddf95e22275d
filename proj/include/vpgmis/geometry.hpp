// Axis-parallel grid paths: representation, validation, and point coverage.
#pragma once

#include "vpgmis/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vpgmis {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

    // 64-bit key combining both coordinates; usable for hashing and ordering
    // of non-negative points.
    uint64_t key() const {
        return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
               static_cast<uint64_t>(static_cast<uint32_t>(y));
    }
};

// A weighted polyline on the lattice. `vertices` lists breakpoints only:
// endpoints plus true bend corners. A single-vertex list is a degenerate
// one-point path.
struct GridPath {
    int id = 0;
    Rational weight = 0;
    std::vector<GridPoint> vertices;

    int segment_count() const {
        return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
    }
    int bend_count() const {
        return vertices.size() < 2 ? 0 : static_cast<int>(vertices.size()) - 2;
    }
    // Longest segment in lattice steps; 0 for degenerate paths.
    int max_segment_length() const;
};

struct BoundingBox {
    int width = 1'000'000;   // valid x range is [0, width]
    int height = 1'000'000;  // valid y range is [0, height]
};

enum class ViolationKind {
    DiagonalSegment,
    ZeroLengthSegment,
    CollinearBreakpoint,
    TooManyBends,
    SelfIntersecting,
    OutOfBounds,
};

struct Violation {
    ViolationKind kind;
    int vertex_index = 0;  // offending vertex (segment start for segment errors)
    int found = 0;         // TooManyBends: bends found
    int allowed = 0;       // TooManyBends: budget k

    std::string describe() const;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every path invariant for bend budget k; collects all violations.
ValidationResult validate_path(const GridPath& path, int k,
                               const BoundingBox& box = {});

// Lattice points covered by the polyline, in walk order from the first
// vertex. Precondition: path is valid, so no point repeats.
std::vector<GridPoint> grid_points(const GridPath& path);

const char* violation_name(ViolationKind kind);

}  // namespace vpgmis
