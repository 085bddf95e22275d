// Local-ratio rounding: turns a feasible fractional solution into an
// independent set whose weight is at least 1/(ck+c+1) of the fractional
// objective. The rounding itself is combinatorial; the fractional solution
// enters only through the certificate.
#pragma once

#include "vpgmis/instance.hpp"
#include "vpgmis/intersection.hpp"
#include "vpgmis/lp.hpp"

#include <string>
#include <vector>

namespace vpgmis {

enum class PivotRule {
    MinId,      // smallest path id among active paths
    MaxWeight,  // largest residual weight, smallest id on ties
};

const char* pivot_rule_name(PivotRule rule);

// Smallest id among the active paths; the default pivot choice. Throws
// std::invalid_argument("EmptyActiveSet") when nothing is active.
int select_pivot(const std::vector<int>& active_ids);

struct SolveReport {
    std::vector<int> selected;  // path ids, sorted ascending
    Rational weight = 0;        // original weights summed over selected

    enum class Objective { Exact, Float, None };
    Objective objective_kind = Objective::None;
    Rational lp_objective_exact = 0;
    double lp_objective_float = 0;

    long long bound = 0;  // ck + c + 1
    bool certified = false;
    std::string pivot_rule = "min-id";
};

// Result JSON, schema-stable:
//   {"selected": [...], "weight": "p/q", "lp_objective": "p/q" | number |
//    null, "bound": B, "certified": bool, "pivot_rule": "..."}
std::string report_to_json(const SolveReport& report);

// Iterative form of the recursive weight decomposition: forward passes
// delete non-positive residuals and subtract the pivot's residual weight
// from its closed neighborhood; the backward pass inserts pivots that stay
// independent. Certifies weight(S) * bound >= w.x against the given
// solution and throws CertificationFailed if that ever fails.
SolveReport local_ratio_round(const Instance& instance, const IntersectionGraph& graph,
                              const LpSolution& solution,
                              PivotRule rule = PivotRule::MinId,
                              double tolerance = 1e-9);

}  // namespace vpgmis
