#include "vpgmis/intersection.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vpgmis {

size_t PointIndex::total_coverage() const {
    size_t sum = 0;
    for (const auto& entry : entries) sum += entry.paths.size();
    return sum;
}

PointIndex build_point_index(const Instance& instance) {
    std::map<std::pair<int, int>, std::vector<int>> by_point;
    for (int pos = 0; pos < instance.n(); ++pos) {
        for (const auto& p : grid_points(instance.paths[pos]))
            by_point[{p.x, p.y}].push_back(pos);
    }

    PointIndex index;
    index.entries.reserve(by_point.size());
    for (auto& [coords, paths] : by_point) {
        // Positions were appended in increasing order already.
        index.entries.push_back({{coords.first, coords.second}, std::move(paths)});
    }
    return index;
}

bool IntersectionGraph::adjacent(int u, int v) const {
    const auto& adj = adjacency[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<int> IntersectionGraph::closed_neighborhood(int v) const {
    std::vector<int> closed = adjacency[v];
    closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
    return closed;
}

IntersectionGraph build_graph(const PointIndex& index, int path_count) {
    IntersectionGraph graph;
    graph.n = path_count;
    graph.adjacency.assign(path_count, {});

    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : index.entries) {
        const auto& paths = entry.paths;
        for (size_t i = 0; i < paths.size(); ++i)
            for (size_t j = i + 1; j < paths.size(); ++j)
                edges.emplace_back(paths[i], paths[j]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    for (const auto& [u, v] : edges) {
        graph.adjacency[u].push_back(v);
        graph.adjacency[v].push_back(u);
    }
    for (auto& adj : graph.adjacency) std::sort(adj.begin(), adj.end());
    return graph;
}

std::string edge_list_text(const IntersectionGraph& graph, const Instance& instance) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < graph.n; ++u) {
        for (int v : graph.adjacency[u]) {
            if (u < v) {
                int a = instance.paths[u].id;
                int b = instance.paths[v].id;
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(edges.begin(), edges.end());

    std::ostringstream out;
    for (const auto& [a, b] : edges) out << a << " " << b << "\n";
    return out.str();
}

}  // namespace vpgmis
