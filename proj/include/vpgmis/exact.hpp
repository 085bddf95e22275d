// Exact maximum-weight independent set for small graphs. Verification only;
// not built for scale.
#pragma once

#include "vpgmis/intersection.hpp"
#include "vpgmis/rational.hpp"

#include <vector>

namespace vpgmis {

struct ExactResult {
    std::vector<int> best_set;  // positions, sorted ascending
    Rational best_weight = 0;
};

// Branch and bound on the highest-degree remaining vertex with the
// sum-of-remaining-positive-weights bound. Only positive-weight vertices are
// considered. Ties between optima break toward the lexicographically
// smallest position set. Throws std::invalid_argument when n exceeds cap.
ExactResult exact_mwis(const IntersectionGraph& graph,
                       const std::vector<Rational>& weights, int cap = 30);

// Exhaustive sweep over all subsets, n <= 20. The oracle's own oracle.
ExactResult exact_mwis_bitmask(const IntersectionGraph& graph,
                               const std::vector<Rational>& weights);

}  // namespace vpgmis
