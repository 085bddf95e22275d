#include "vpgmis/local_ratio.hpp"

#include "vpgmis/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace vpgmis {

const char* pivot_rule_name(PivotRule rule) {
    switch (rule) {
        case PivotRule::MinId: return "min-id";
        case PivotRule::MaxWeight: return "max-weight";
    }
    return "?";
}

int select_pivot(const std::vector<int>& active_ids) {
    if (active_ids.empty()) throw std::invalid_argument("EmptyActiveSet");
    return *std::min_element(active_ids.begin(), active_ids.end());
}

namespace {

// Forward/backward passes over residual weights in S arithmetic.
// nonpos_tol absorbs roundoff when S = double.
template <typename S>
std::vector<int> round_selection(const Instance& instance, const IntersectionGraph& graph,
                                 std::vector<S> residual, PivotRule rule, S nonpos_tol) {
    const int n = instance.n();
    std::vector<char> active(n, 1);
    std::vector<int> stack;
    stack.reserve(n);

    for (;;) {
        // Step 1: delete paths with non-positive residual weight.
        for (int v = 0; v < n; ++v) {
            if (active[v] && residual[v] <= nonpos_tol) active[v] = 0;
        }

        // Step 2: pick a pivot among the survivors.
        int pivot = -1;
        for (int v = 0; v < n; ++v) {
            if (!active[v]) continue;
            if (pivot < 0) {
                pivot = v;
                continue;
            }
            switch (rule) {
                case PivotRule::MinId:
                    if (instance.paths[v].id < instance.paths[pivot].id) pivot = v;
                    break;
                case PivotRule::MaxWeight:
                    if (residual[v] > residual[pivot] ||
                        (residual[v] == residual[pivot] &&
                         instance.paths[v].id < instance.paths[pivot].id))
                        pivot = v;
                    break;
            }
        }
        if (pivot < 0) break;

        // Step 3: subtract the pivot's residual across its closed
        // neighborhood. The pivot zeroes itself, so every iteration retires
        // at least one path.
        const S delta = residual[pivot];
        residual[pivot] -= delta;
        for (int nb : graph.adjacency[pivot]) {
            if (active[nb]) residual[nb] -= delta;
        }
        stack.push_back(pivot);
    }

    // Step 4, unwound: keep a pivot iff nothing already kept is adjacent.
    std::vector<char> selected(n, 0);
    std::vector<int> chosen;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        bool blocked = false;
        for (int nb : graph.adjacency[*it]) {
            if (selected[nb]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            selected[*it] = 1;
            chosen.push_back(*it);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

SolveReport local_ratio_round(const Instance& instance, const IntersectionGraph& graph,
                              const LpSolution& solution, PivotRule rule,
                              double tolerance) {
    const int n = instance.n();
    SolveReport report;
    report.bound = instance.ratio_bound();
    report.pivot_rule = pivot_rule_name(rule);

    std::vector<int> chosen;
    if (solution.arith == Arith::Exact) {
        std::vector<Rational> residual;
        residual.reserve(n);
        for (const auto& path : instance.paths) residual.push_back(path.weight);
        chosen = round_selection<Rational>(instance, graph, std::move(residual), rule,
                                           Rational(0));
    } else {
        std::vector<double> residual;
        residual.reserve(n);
        for (const auto& path : instance.paths) residual.push_back(to_double(path.weight));
        chosen = round_selection<double>(instance, graph, std::move(residual), rule, 1e-12);
    }

    report.selected.reserve(chosen.size());
    for (int v : chosen) {
        report.selected.push_back(instance.paths[v].id);
        report.weight += instance.paths[v].weight;
    }
    std::sort(report.selected.begin(), report.selected.end());

    // Certificate against the same fractional solution that licensed the
    // pivots, with the objective recomputed from the weights rather than
    // taken from the solver.
    if (solution.arith == Arith::Exact) {
        Rational objective = 0;
        for (int v = 0; v < n; ++v)
            objective += instance.paths[v].weight * solution.x_exact[v];
        report.objective_kind = SolveReport::Objective::Exact;
        report.lp_objective_exact = objective;
        report.certified = report.weight * Rational(report.bound) >= objective;
        if (!report.certified)
            throw CertificationFailed(to_string(report.weight), to_string(objective),
                                      report.bound);
    } else {
        double objective = 0;
        for (int v = 0; v < n; ++v)
            objective += to_double(instance.paths[v].weight) * solution.x_float[v];
        report.objective_kind = SolveReport::Objective::Float;
        report.lp_objective_float = objective;
        const double lhs = to_double(report.weight) * static_cast<double>(report.bound);
        report.certified =
            lhs >= objective - tolerance * std::max(1.0, std::fabs(objective));
        if (!report.certified)
            throw CertificationFailed(std::to_string(lhs), std::to_string(objective),
                                      report.bound);
    }
    return report;
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::ordered_json doc;
    doc["selected"] = report.selected;
    doc["weight"] = to_string(report.weight);
    switch (report.objective_kind) {
        case SolveReport::Objective::Exact:
            doc["lp_objective"] = to_string(report.lp_objective_exact);
            break;
        case SolveReport::Objective::Float:
            doc["lp_objective"] = report.lp_objective_float;
            break;
        case SolveReport::Objective::None:
            doc["lp_objective"] = nullptr;
            break;
    }
    doc["bound"] = report.bound;
    doc["certified"] = report.certified;
    doc["pivot_rule"] = report.pivot_rule;
    return doc.dump() + "\n";
}

}  // namespace vpgmis
