// End-to-end pipeline: validate -> index -> graph -> LP -> rounding.
#pragma once

#include "vpgmis/instance.hpp"
#include "vpgmis/intersection.hpp"
#include "vpgmis/local_ratio.hpp"
#include "vpgmis/lp.hpp"

namespace vpgmis {

struct SolveOptions {
    Arith arith = Arith::Auto;
    double tolerance = 1e-9;
    PivotRule pivot = PivotRule::MinId;
    BoundingBox box{};
};

struct SolveOutput {
    SolveReport report;
    LpProblem lp;
    LpSolution lp_solution;
    IntersectionGraph graph;
};

// Throws std::invalid_argument when the instance fails validation. A float
// solve that hits numerical trouble is retried once in exact arithmetic.
SolveOutput solve_instance(const Instance& instance, const SolveOptions& options = {});

}  // namespace vpgmis
