#include "vpgmis/lp.hpp"

#include "vpgmis/errors.hpp"
#include "vpgmis/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <map>
#include <sstream>

namespace vpgmis {

Arith resolve_arith(Arith requested, int num_vars) {
    if (requested != Arith::Auto) return requested;
    return num_vars <= 64 ? Arith::Exact : Arith::Float;
}

const char* arith_name(Arith arith) {
    switch (arith) {
        case Arith::Auto: return "auto";
        case Arith::Exact: return "exact";
        case Arith::Float: return "float";
    }
    return "?";
}

LpProblem build_lp(const Instance& instance, const PointIndex& index,
                   const BuildLpOptions& options) {
    LpProblem lp;
    lp.num_vars = instance.n();
    lp.objective.reserve(lp.num_vars);
    for (const auto& path : instance.paths) lp.objective.push_back(path.weight);

    if (options.collapse) {
        // Multi-covered points, one row per distinct support set; index
        // entries are point-sorted, so first occurrence wins deterministically.
        std::map<std::vector<int>, size_t> seen;
        for (const auto& entry : index.entries) {
            if (entry.paths.size() < 2) continue;  // dominated by the box row
            if (seen.emplace(entry.paths, lp.rows.size()).second)
                lp.rows.push_back({LpRowKind::Point, entry.paths, entry.point});
        }
        for (int v = 0; v < lp.num_vars; ++v)
            lp.rows.push_back({LpRowKind::Box, {v}, {}});
    } else {
        for (const auto& entry : index.entries)
            lp.rows.push_back({LpRowKind::Point, entry.paths, entry.point});
    }

    assert(static_cast<long long>(lp.rows.size()) <=
           instance.ratio_bound() * std::max(1, lp.num_vars));
    return lp;
}

namespace {

template <typename S>
std::vector<std::vector<S>> dense_matrix(const LpProblem& lp) {
    std::vector<std::vector<S>> a(lp.rows.size(), std::vector<S>(lp.num_vars, S(0)));
    for (size_t i = 0; i < lp.rows.size(); ++i)
        for (int v : lp.rows[i].support) a[i][v] = S(1);
    return a;
}

}  // namespace

LpSolution solve_lp(const LpProblem& lp, Arith arith, double tolerance) {
    const Arith mode = resolve_arith(arith, lp.num_vars);
    LpSolution solution;
    solution.arith = mode;
    solution.status = LpStatus::Optimal;

    if (mode == Arith::Exact) {
        auto a = dense_matrix<Rational>(lp);
        std::vector<Rational> b(lp.rows.size(), Rational(1));
        auto outcome = simplex_maximize<Rational>(a, b, lp.objective, Rational(0));
        solution.x_exact = std::move(outcome.x);
        solution.objective_exact = std::move(outcome.objective);
        solution.iterations = outcome.iterations;
        return solution;
    }

    auto a = dense_matrix<double>(lp);
    std::vector<double> b(lp.rows.size(), 1.0);
    std::vector<double> c(lp.num_vars);
    for (int j = 0; j < lp.num_vars; ++j) c[j] = to_double(lp.objective[j]);

    auto outcome = simplex_maximize<double>(a, b, c, tolerance);
    solution.iterations = outcome.iterations;

    // Audit: roundoff must not have drifted outside the tolerance.
    for (double& value : outcome.x) {
        if (value < -tolerance)
            throw NumericalFailure("negative variable after float solve");
        if (value < 0) value = 0;
    }
    for (const auto& row : lp.rows) {
        double sum = 0;
        for (int v : row.support) sum += outcome.x[v];
        if (sum > 1.0 + tolerance)
            throw NumericalFailure("constraint violated after float solve");
    }

    solution.x_float = std::move(outcome.x);
    solution.objective_float = 0;
    for (int j = 0; j < lp.num_vars; ++j)
        solution.objective_float += c[j] * solution.x_float[j];
    return solution;
}

NeighborhoodBounds check_neighborhood_bound(const LpSolution& solution,
                                            const IntersectionGraph& graph,
                                            const Instance& instance,
                                            double tolerance) {
    NeighborhoodBounds result;
    result.bound = instance.ratio_bound();

    if (solution.arith == Arith::Exact) {
        result.sums_exact.reserve(graph.n);
        for (int v = 0; v < graph.n; ++v) {
            Rational sum = solution.x_exact[v];
            for (int nb : graph.adjacency[v]) sum += solution.x_exact[nb];
            if (sum > Rational(result.bound))
                throw BoundViolated("BoundViolated: path " +
                                    std::to_string(instance.paths[v].id) + " sum " +
                                    to_string(sum) + " exceeds " +
                                    std::to_string(result.bound));
            result.sums_exact.push_back(std::move(sum));
        }
    } else {
        result.sums_float.reserve(graph.n);
        for (int v = 0; v < graph.n; ++v) {
            double sum = solution.x_float[v];
            for (int nb : graph.adjacency[v]) sum += solution.x_float[nb];
            if (sum > static_cast<double>(result.bound) + tolerance)
                throw BoundViolated("BoundViolated: path " +
                                    std::to_string(instance.paths[v].id) + " sum " +
                                    std::to_string(sum) + " exceeds " +
                                    std::to_string(result.bound));
            result.sums_float.push_back(sum);
        }
    }
    return result;
}

namespace {

std::string objective_coeff_text(const Rational& w) {
    const BigInt den = boost::multiprecision::denominator(w);
    if (den == 1) return boost::multiprecision::numerator(w).str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", to_double(w));
    return buf;
}

}  // namespace

std::string lp_format_text(const LpProblem& lp, const Instance& instance) {
    std::ostringstream out;
    auto var = [&](int v) { return "x" + std::to_string(instance.paths[v].id); };

    out << "Maximize\n obj:";
    bool first = true;
    for (int v = 0; v < lp.num_vars; ++v) {
        const Rational& w = lp.objective[v];
        if (w == 0) continue;
        std::string coeff = objective_coeff_text(w < 0 ? Rational(-w) : w);
        out << (w < 0 ? " - " : (first ? " " : " + ")) << coeff << " " << var(v);
        first = false;
    }
    if (first) out << (lp.num_vars > 0 ? " 0 " + var(0) : " 0");
    out << "\nSubject To\n";
    size_t row_index = 0;
    std::vector<bool> boxed(lp.num_vars, false);
    for (const auto& row : lp.rows) {
        if (row.kind == LpRowKind::Box) {
            boxed[row.support[0]] = true;
            continue;
        }
        out << " c" << row_index++ << ":";
        for (size_t i = 0; i < row.support.size(); ++i)
            out << (i ? " + " : " ") << var(row.support[i]);
        out << " <= 1\n";
    }
    out << "Bounds\n";
    for (int v = 0; v < lp.num_vars; ++v) {
        if (boxed[v]) out << " 0 <= " << var(v) << " <= 1\n";
    }
    out << "End\n";
    return out.str();
}

}  // namespace vpgmis
