// Problem instances: a bend budget k plus a set of weighted grid paths,
// with the derived longest-segment length c and the ratio bound ck+c+1.
#pragma once

#include "vpgmis/geometry.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vpgmis {

struct Instance {
    int k = 0;
    std::vector<GridPath> paths;
    int c = 1;  // derived; 1 for instances without any segment

    int n() const { return static_cast<int>(paths.size()); }

    // ck + c + 1, always >= 2.
    long long ratio_bound() const {
        return static_cast<long long>(c) * k + c + 1;
    }

    // Position of a path id in `paths`, or nullopt.
    std::optional<int> position_of(int id) const;
};

// Longest segment length over all paths, in lattice steps. Falls back to 1
// when no path has a segment. Throws std::invalid_argument on an empty
// instance.
int derive_c(const Instance& instance);

// Builds an instance from parts and fills in c (using the floor convention
// for all-degenerate or empty path sets).
Instance make_instance(int k, std::vector<GridPath> paths);

struct InstanceValidation {
    // One entry per offending path, in path order.
    struct PathReport {
        int path_id;
        std::vector<Violation> violations;
    };
    std::vector<PathReport> reports;
    bool duplicate_ids = false;
    bool ok() const { return reports.empty() && !duplicate_ids; }
};

InstanceValidation validate_instance(const Instance& instance,
                                     const BoundingBox& box = {});

// JSON instance format:
//   {"k": <int>, "paths": [{"id": <int>, "weight": <number or "p/q">,
//                           "vertices": [[x, y], ...]}, ...]}
// Unknown fields are rejected. Throws std::invalid_argument on malformed
// documents.
Instance parse_instance_json(const std::string& text);
Instance load_instance(const std::string& file_path);
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::string& file_path);

}  // namespace vpgmis
