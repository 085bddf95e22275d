// Command-line front end: validate, solve, exact, gen, bench, render.
#include "vpgmis/bench.hpp"
#include "vpgmis/errors.hpp"
#include "vpgmis/exact.hpp"
#include "vpgmis/generate.hpp"
#include "vpgmis/render.hpp"
#include "vpgmis/solve.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace vpgmis;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation failure, certification trap
constexpr int kExitParse = 2;    // malformed input or I/O trouble

Arith parse_arith(const std::string& name) {
    if (name == "auto") return Arith::Auto;
    if (name == "exact") return Arith::Exact;
    if (name == "float") return Arith::Float;
    throw CLI::ValidationError("--arith must be auto, exact, or float");
}

PivotRule parse_pivot(const std::string& name) {
    if (name == "min-id") return PivotRule::MinId;
    if (name == "max-weight") return PivotRule::MaxWeight;
    throw CLI::ValidationError("--pivot must be min-id or max-weight");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

// "1,3,5" or "1:5" (inclusive) or a mix: "1,4:6,9".
template <typename T>
std::vector<T> parse_int_list(const std::string& text) {
    std::vector<T> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            values.push_back(static_cast<T>(std::stoll(item)));
        } else {
            long long lo = std::stoll(item.substr(0, colon));
            long long hi = std::stoll(item.substr(colon + 1));
            for (long long v = lo; v <= hi; ++v) values.push_back(static_cast<T>(v));
        }
    }
    if (values.empty()) throw CLI::ValidationError("empty list: " + text);
    return values;
}

int print_validation(const Instance& instance, const InstanceValidation& validation) {
    if (validation.ok()) {
        std::cout << "OK n=" << instance.n() << " k=" << instance.k
                  << " c=" << instance.c << " B=" << instance.ratio_bound() << "\n";
        return kExitOk;
    }
    if (validation.duplicate_ids) std::cout << "duplicate path ids\n";
    for (const auto& report : validation.reports) {
        for (const auto& violation : report.violations)
            std::cout << "path " << report.path_id << ": " << violation.describe()
                      << "\n";
    }
    return kExitFailure;
}

struct GlobalFlags {
    std::string arith = "auto";
    double tolerance = 1e-9;
};

int run(int argc, char** argv) {
    CLI::App app{"Approximate maximum-weight independent set on weighted grid paths"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--arith", flags.arith,
                   "Arithmetic mode: auto (exact up to n=64), exact, float");
    app.add_option("--tolerance", flags.tolerance,
                   "Feasibility/certificate tolerance in float mode");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "Check an instance file");
    std::string validate_input;
    cmd_validate->add_option("input", validate_input, "Instance JSON file")->required();

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Approximate a maximum-weight set");
    std::string solve_input, solve_pivot = "min-id", solve_lp_dump, solve_graph_dump;
    cmd_solve->add_option("input", solve_input, "Instance JSON file")->required();
    cmd_solve->add_option("--pivot", solve_pivot, "Pivot rule: min-id or max-weight");
    cmd_solve->add_option("--lp-dump", solve_lp_dump, "Write the LP in text form");
    cmd_solve->add_option("--graph-dump", solve_graph_dump,
                          "Write the intersection graph edge list");

    // exact
    auto* cmd_exact = app.add_subcommand("exact", "Exact solve (small instances)");
    std::string exact_input;
    int exact_cap = 30;
    cmd_exact->add_option("input", exact_input, "Instance JSON file")->required();
    cmd_exact->add_option("--cap", exact_cap, "Refuse instances larger than this");

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "Generate a random instance");
    GenParams gen_params;
    std::string gen_out, gen_grid = "64x64", gen_weights = "1:100";
    cmd_gen->add_option("--seed", gen_params.seed, "RNG seed");
    cmd_gen->add_option("--n", gen_params.n, "Number of paths");
    cmd_gen->add_option("--k", gen_params.k, "Bend budget");
    cmd_gen->add_option("--c", gen_params.c, "Maximum segment length");
    cmd_gen->add_option("--grid", gen_grid, "Bounding box, WxH");
    cmd_gen->add_option("--weights", gen_weights, "Weight range, lo:hi");
    cmd_gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "Parameter sweep to CSV");
    std::string bench_ns = "10", bench_ks = "1", bench_cs = "2", bench_seeds = "1:5";
    std::string bench_out, bench_grid = "64x64", bench_weights = "1:100";
    std::string bench_pivot = "min-id";
    int bench_exact_cap = 18, bench_jobs = 1;
    bool bench_no_timing = false;
    cmd_bench->add_option("--n", bench_ns, "Path counts, list/range");
    cmd_bench->add_option("--k", bench_ks, "Bend budgets, list/range");
    cmd_bench->add_option("--c", bench_cs, "Segment lengths, list/range");
    cmd_bench->add_option("--seeds", bench_seeds, "Seeds, list/range");
    cmd_bench->add_option("--grid", bench_grid, "Bounding box, WxH");
    cmd_bench->add_option("--weights", bench_weights, "Weight range, lo:hi");
    cmd_bench->add_option("--pivot", bench_pivot, "Pivot rule");
    cmd_bench->add_option("--exact-cap", bench_exact_cap,
                          "Fill exact_weight up to this n");
    cmd_bench->add_option("--jobs", bench_jobs, "Worker threads");
    cmd_bench->add_flag("--no-timing", bench_no_timing,
                        "Write 0 in runtime_ms for byte-stable output");
    cmd_bench->add_option("-o,--out", bench_out, "Output CSV file (default stdout)");

    // render
    auto* cmd_render = app.add_subcommand("render", "Draw an instance as SVG");
    std::string render_input, render_out, render_highlight;
    cmd_render->add_option("input", render_input, "Instance JSON file")->required();
    cmd_render->add_option("-o,--out", render_out, "Output SVG file")->required();
    cmd_render->add_option("--highlight", render_highlight,
                           "Path ids to emphasize, list/range");

    CLI11_PARSE(app, argc, argv);

    const Arith arith = parse_arith(flags.arith);

    if (*cmd_validate) {
        const Instance instance = load_instance(validate_input);
        return print_validation(instance, validate_instance(instance));
    }

    if (*cmd_solve) {
        const Instance instance = load_instance(solve_input);
        const auto validation = validate_instance(instance);
        if (!validation.ok()) return print_validation(instance, validation);

        SolveOptions options;
        options.arith = arith;
        options.tolerance = flags.tolerance;
        options.pivot = parse_pivot(solve_pivot);
        try {
            const SolveOutput out = solve_instance(instance, options);
            if (!solve_lp_dump.empty())
                write_file(solve_lp_dump, lp_format_text(out.lp, instance));
            if (!solve_graph_dump.empty())
                write_file(solve_graph_dump, edge_list_text(out.graph, instance));
            std::cout << report_to_json(out.report);
            return kExitOk;
        } catch (const CertificationFailed& e) {
            std::cout << "{\"error\":\"CertificationFailed\",\"weight\":\"" << e.weight
                      << "\",\"lp_objective\":\"" << e.lp_objective
                      << "\",\"bound\":" << e.bound << "}\n";
            return kExitFailure;
        }
    }

    if (*cmd_exact) {
        const Instance instance = load_instance(exact_input);
        const auto validation = validate_instance(instance);
        if (!validation.ok()) return print_validation(instance, validation);

        const auto index = build_point_index(instance);
        const auto graph = build_graph(index, instance.n());
        std::vector<Rational> weights;
        weights.reserve(instance.n());
        for (const auto& path : instance.paths) weights.push_back(path.weight);

        const ExactResult best = exact_mwis(graph, weights, exact_cap);
        SolveReport report;
        for (int pos : best.best_set) report.selected.push_back(instance.paths[pos].id);
        std::sort(report.selected.begin(), report.selected.end());
        report.weight = best.best_weight;
        report.objective_kind = SolveReport::Objective::None;
        report.bound = instance.ratio_bound();
        report.certified = true;
        report.pivot_rule = "exact";
        std::cout << report_to_json(report);
        return kExitOk;
    }

    if (*cmd_gen) {
        if (std::sscanf(gen_grid.c_str(), "%dx%d", &gen_params.grid_w,
                        &gen_params.grid_h) != 2)
            throw CLI::ValidationError("--grid expects WxH");
        if (std::sscanf(gen_weights.c_str(), "%lld:%lld", &gen_params.weight_min,
                        &gen_params.weight_max) != 2)
            throw CLI::ValidationError("--weights expects lo:hi");
        const Instance instance = generate(gen_params);
        if (gen_out.empty())
            std::cout << instance_to_json(instance);
        else
            save_instance(instance, gen_out);
        return kExitOk;
    }

    if (*cmd_bench) {
        BenchParams params;
        params.ns = parse_int_list<int>(bench_ns);
        params.ks = parse_int_list<int>(bench_ks);
        params.cs = parse_int_list<int>(bench_cs);
        params.seeds = parse_int_list<uint64_t>(bench_seeds);
        if (std::sscanf(bench_grid.c_str(), "%dx%d", &params.grid_w, &params.grid_h) != 2)
            throw CLI::ValidationError("--grid expects WxH");
        if (std::sscanf(bench_weights.c_str(), "%lld:%lld", &params.weight_min,
                        &params.weight_max) != 2)
            throw CLI::ValidationError("--weights expects lo:hi");
        params.arith = arith;
        params.tolerance = flags.tolerance;
        params.pivot = parse_pivot(bench_pivot);
        params.exact_cap = bench_exact_cap;
        params.jobs = bench_jobs;
        params.measure_time = !bench_no_timing;

        const std::string csv = run_bench_csv(params);
        if (bench_out.empty())
            std::cout << csv;
        else
            write_file(bench_out, csv);
        return kExitOk;
    }

    if (*cmd_render) {
        const Instance instance = load_instance(render_input);
        const auto validation = validate_instance(instance);
        if (!validation.ok()) return print_validation(instance, validation);

        RenderOptions options;
        if (!render_highlight.empty())
            options.highlight_ids = parse_int_list<int>(render_highlight);
        write_file(render_out, render_svg(instance, options));
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CertificationFailed& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
