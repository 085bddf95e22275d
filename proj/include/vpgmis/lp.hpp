// Packing LP over grid-point constraints: for every covered point t, the
// paths lying on t sum to at most one. Solved by the dense simplex in
// simplex.hpp, exactly over rationals or in doubles with a tolerance.
#pragma once

#include "vpgmis/instance.hpp"
#include "vpgmis/intersection.hpp"
#include "vpgmis/rational.hpp"

#include <string>
#include <vector>

namespace vpgmis {

enum class Arith { Auto, Exact, Float };

// Auto means exact arithmetic up to 64 paths, doubles beyond.
Arith resolve_arith(Arith requested, int num_vars);
const char* arith_name(Arith arith);

enum class LpRowKind {
    Point,  // shared grid point: sum over covering paths <= 1
    Box,    // single variable upper bound x <= 1
};

struct LpRow {
    LpRowKind kind = LpRowKind::Point;
    std::vector<int> support;  // variable positions, sorted ascending
    GridPoint origin{};        // Point rows: a grid point realizing the row
};

struct LpProblem {
    int num_vars = 0;
    std::vector<Rational> objective;  // path weights, by position
    std::vector<LpRow> rows;          // every right-hand side is 1
};

struct BuildLpOptions {
    // Collapsed form: one row per distinct support at multi-covered points,
    // plus one box row per variable. Raw form: one row per covered grid
    // point, no dedup, no boxes.
    bool collapse = true;
};

LpProblem build_lp(const Instance& instance, const PointIndex& index,
                   const BuildLpOptions& options = {});

enum class LpStatus { Optimal, FeasibleWithGap };

struct LpSolution {
    Arith arith = Arith::Exact;
    LpStatus status = LpStatus::Optimal;
    double gap = 0;  // FeasibleWithGap only

    std::vector<Rational> x_exact;  // exact mode
    Rational objective_exact = 0;

    std::vector<double> x_float;  // float mode
    double objective_float = 0;

    long iterations = 0;

    int num_vars() const {
        return static_cast<int>(arith == Arith::Exact ? x_exact.size() : x_float.size());
    }
    double x_as_double(int i) const {
        return arith == Arith::Exact ? to_double(x_exact[i]) : x_float[i];
    }
    double objective_as_double() const {
        return arith == Arith::Exact ? to_double(objective_exact) : objective_float;
    }
};

// Solves to optimality. Float mode audits the result and throws
// NumericalFailure when roundoff broke feasibility beyond the tolerance;
// callers are expected to retry in exact mode.
LpSolution solve_lp(const LpProblem& lp, Arith arith = Arith::Auto,
                    double tolerance = 1e-9);

// Per-path closed-neighborhood sums of a feasible solution. Each must stay
// within ck+c+1 (plus the tolerance in float mode); a violation means a bug
// and raises BoundViolated.
struct NeighborhoodBounds {
    long long bound = 0;                 // ck+c+1
    std::vector<Rational> sums_exact;    // exact mode, by position
    std::vector<double> sums_float;      // float mode, by position
};

NeighborhoodBounds check_neighborhood_bound(const LpSolution& solution,
                                            const IntersectionGraph& graph,
                                            const Instance& instance,
                                            double tolerance = 1e-9);

// Human-readable LP text (CPLEX LP style) for external cross-checking.
// Variables are named x<path id>.
std::string lp_format_text(const LpProblem& lp, const Instance& instance);

}  // namespace vpgmis
