#include "vpgmis/bench.hpp"

#include "vpgmis/exact.hpp"
#include "vpgmis/generate.hpp"
#include "vpgmis/solve.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace vpgmis {

namespace {

struct Cell {
    int n, k, c;
    uint64_t seed;
};

std::string format_double(double value, const char* fmt = "%.9g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

std::string csv_safe(std::string text) {
    for (char& ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ' ';
    }
    return text;
}

std::string run_cell(const BenchParams& params, const Cell& cell) {
    std::string row = std::to_string(cell.seed) + "," + std::to_string(cell.n) + "," +
                      std::to_string(cell.k) + "," + std::to_string(cell.c) + ",";
    try {
        GenParams gen_params;
        gen_params.n = cell.n;
        gen_params.k = cell.k;
        gen_params.c = cell.c;
        gen_params.grid_w = params.grid_w;
        gen_params.grid_h = params.grid_h;
        gen_params.weight_min = params.weight_min;
        gen_params.weight_max = params.weight_max;
        gen_params.seed = cell.seed;
        const Instance instance = generate(gen_params);

        SolveOptions options;
        options.arith = params.arith;
        options.tolerance = params.tolerance;
        options.pivot = params.pivot;

        const auto start = std::chrono::steady_clock::now();
        const SolveOutput out = solve_instance(instance, options);
        const auto stop = std::chrono::steady_clock::now();
        const double elapsed_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();

        const SolveReport& report = out.report;
        const bool exact_mode =
            report.objective_kind == SolveReport::Objective::Exact;
        const std::string lp_objective =
            exact_mode ? to_string(report.lp_objective_exact)
                       : format_double(report.lp_objective_float, "%.17g");
        const double lp_objective_d = exact_mode
                                          ? to_double(report.lp_objective_exact)
                                          : report.lp_objective_float;

        std::string exact_weight;
        std::string ratio_opt;
        if (cell.n <= params.exact_cap) {
            std::vector<Rational> weights;
            weights.reserve(instance.n());
            for (const auto& path : instance.paths) weights.push_back(path.weight);
            const ExactResult best =
                exact_mwis(out.graph, weights, std::max(params.exact_cap, cell.n));
            exact_weight = to_string(best.best_weight);
            if (report.weight > 0)
                ratio_opt = format_double(to_double(best.best_weight / report.weight));
        }

        std::string ratio_lp;
        if (report.weight > 0)
            ratio_lp = format_double(lp_objective_d / to_double(report.weight));

        row += std::to_string(report.bound) + "," + lp_objective + "," +
               to_string(report.weight) + "," + exact_weight + "," + ratio_lp + "," +
               ratio_opt + "," +
               (params.measure_time ? format_double(elapsed_ms, "%.3f") : "0") + ",";
    } catch (const std::exception& e) {
        // bound..runtime_ms stay empty, the error lands in the last column.
        row += ",,,,,,," + csv_safe(e.what());
    }
    return row + "\n";
}

}  // namespace

std::string run_bench_csv(const BenchParams& params) {
    std::vector<Cell> cells;
    for (int n : params.ns)
        for (int k : params.ks)
            for (int c : params.cs)
                for (uint64_t seed : params.seeds) cells.push_back({n, k, c, seed});

    std::vector<std::string> rows(cells.size());
    const int jobs = std::max(1, params.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(params, cells[i]);
    } else {
        std::atomic<size_t> cursor{0};
        auto worker = [&]() {
            for (;;) {
                const size_t i = cursor.fetch_add(1);
                if (i >= cells.size()) return;
                rows[i] = run_cell(params, cells[i]);
            }
        };
        std::vector<std::thread> pool;
        const size_t count = std::min<size_t>(jobs, cells.size());
        pool.reserve(count);
        for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    std::string csv =
        "seed,n,k,c,bound,lp_objective,alg_weight,exact_weight,ratio_lp,ratio_opt,"
        "runtime_ms,error\n";
    for (const auto& row : rows) csv += row;
    return csv;
}

}  // namespace vpgmis
