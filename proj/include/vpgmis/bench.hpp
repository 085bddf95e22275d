// Benchmark sweeps: generate, solve, optionally compare against the exact
// solver, and tabulate one CSV row per (n, k, c, seed) cell.
#pragma once

#include "vpgmis/local_ratio.hpp"
#include "vpgmis/lp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vpgmis {

struct BenchParams {
    std::vector<int> ns{10};
    std::vector<int> ks{1};
    std::vector<int> cs{2};
    std::vector<uint64_t> seeds{1};

    int grid_w = 64;
    int grid_h = 64;
    long long weight_min = 1;
    long long weight_max = 100;

    Arith arith = Arith::Auto;
    double tolerance = 1e-9;
    PivotRule pivot = PivotRule::MinId;

    int exact_cap = 18;  // fill exact_weight for n <= cap
    int jobs = 1;        // worker threads; rows stay in cell order regardless
    bool measure_time = true;  // false writes 0 in runtime_ms for stable files
};

// Header plus one row per cell, cells ordered by (n, k, c, seed) nesting.
// A failing cell reports its error in the last column instead of aborting
// the sweep.
std::string run_bench_csv(const BenchParams& params);

}  // namespace vpgmis
