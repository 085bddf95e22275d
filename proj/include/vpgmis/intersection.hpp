// Point index and intersection graph over a validated instance.
//
// Two paths are adjacent iff they share at least one grid point; touching at
// a single node counts. Internally everything is indexed by path position
// (0..n-1, instance order); exports translate back to path ids.
#pragma once

#include "vpgmis/instance.hpp"

#include <string>
#include <vector>

namespace vpgmis {

// For every covered grid point, the paths (by position) lying on it.
struct PointIndex {
    struct Entry {
        GridPoint point;
        std::vector<int> paths;  // positions, sorted ascending
    };
    std::vector<Entry> entries;  // sorted by (x, y)

    // Sum over entries of |paths|; equals the total coverage of the instance.
    size_t total_coverage() const;
};

PointIndex build_point_index(const Instance& instance);

struct IntersectionGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // positions, each list sorted

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    // Closed neighborhood: neighbors plus the path itself, sorted.
    std::vector<int> closed_neighborhood(int v) const;
};

IntersectionGraph build_graph(const PointIndex& index, int path_count);

// Edge list "u v" per line using path ids, u < v, sorted; for external
// cross-checks.
std::string edge_list_text(const IntersectionGraph& graph, const Instance& instance);

}  // namespace vpgmis
