// Seeded random instance generation. The generator is fully deterministic:
// one xorshift64* stream drives every draw, so a seed pins the instance
// byte-for-byte across platforms.
#pragma once

#include "vpgmis/instance.hpp"

#include <cstdint>

namespace vpgmis {

// Marsaglia xorshift64 with Vigna's star multiplier. Fixed constants, fixed
// state transition; never touches platform RNGs.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    // Uniform-ish draw in [0, bound) via modulo; the tiny bias is irrelevant
    // for test workloads and keeps the mapping trivially portable.
    uint64_t below(uint64_t bound) { return next() % bound; }

    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

struct GenParams {
    int n = 10;
    int k = 1;
    int c = 2;
    int grid_w = 64;
    int grid_h = 64;
    long long weight_min = 1;
    long long weight_max = 100;
    uint64_t seed = 1;
};

// Throws GenerationFailed when the grid cannot hold a maximal path
// (grid_w or grid_h < c*(k+1)) and std::invalid_argument on other bad
// parameters. Every returned path validates against budget k; the derived c
// never exceeds params.c.
Instance generate(const GenParams& params);

}  // namespace vpgmis
