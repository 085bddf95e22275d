#include "vpgmis/solve.hpp"

#include "vpgmis/errors.hpp"

namespace vpgmis {

SolveOutput solve_instance(const Instance& instance, const SolveOptions& options) {
    const auto validation = validate_instance(instance, options.box);
    if (!validation.ok()) {
        std::string message = "invalid instance:";
        if (validation.duplicate_ids) message += " duplicate path ids;";
        for (const auto& report : validation.reports) {
            for (const auto& violation : report.violations)
                message += " path " + std::to_string(report.path_id) + ": " +
                           violation.describe() + ";";
        }
        throw std::invalid_argument(message);
    }

    SolveOutput out;
    const auto index = build_point_index(instance);
    out.graph = build_graph(index, instance.n());
    out.lp = build_lp(instance, index);

    const Arith mode = resolve_arith(options.arith, instance.n());
    try {
        out.lp_solution = solve_lp(out.lp, mode, options.tolerance);
    } catch (const NumericalFailure&) {
        out.lp_solution = solve_lp(out.lp, Arith::Exact, options.tolerance);
    }

    out.report = local_ratio_round(instance, out.graph, out.lp_solution, options.pivot,
                                   options.tolerance);
    return out;
}

}  // namespace vpgmis
