#include "vpgmis/generate.hpp"

#include "vpgmis/errors.hpp"

#include <doctest.h>

using namespace vpgmis;

TEST_CASE("prng stream is pinned") {
    // First draws of the documented generator for seed 1; these values are
    // part of the reproducibility contract, so a refactor must not move them.
    Xorshift64Star rng(1);
    CHECK(rng.next() == 5180492295206395165ull);
    Xorshift64Star again(1);
    CHECK(again.next() == 5180492295206395165ull);

    // Seed 0 is remapped to a fixed nonzero state, not a stuck-at-zero stream.
    Xorshift64Star zero(0);
    CHECK(zero.next() != 0);
    CHECK(Xorshift64Star(0).next() == Xorshift64Star(0).next());
}

TEST_CASE("same seed means byte identical instances") {
    GenParams params;
    params.n = 25;
    params.k = 2;
    params.c = 3;
    params.grid_w = params.grid_h = 20;
    params.seed = 42;
    const std::string a = instance_to_json(generate(params));
    const std::string b = instance_to_json(generate(params));
    CHECK(a == b);

    params.seed = 43;
    CHECK(instance_to_json(generate(params)) != a);
}

TEST_CASE("k zero makes straight segments only") {
    GenParams params;
    params.n = 40;
    params.k = 0;
    params.c = 4;
    params.grid_w = params.grid_h = 30;
    params.seed = 7;
    const Instance instance = generate(params);
    CHECK(instance.k == 0);
    for (const auto& path : instance.paths) CHECK(path.bend_count() == 0);
}

TEST_CASE("unit segments with one bend cover at most three points") {
    GenParams params;
    params.n = 40;
    params.k = 1;
    params.c = 1;
    params.grid_w = params.grid_h = 12;
    params.seed = 11;
    const Instance instance = generate(params);
    for (const auto& path : instance.paths) {
        CHECK(grid_points(path).size() <= 3);
        CHECK(path.max_segment_length() <= 1);
    }
}

TEST_CASE("all generated paths validate") {
    Xorshift64Star rng(321);
    for (int trial = 0; trial < 20; ++trial) {
        GenParams params;
        params.n = 1 + static_cast<int>(rng.below(40));
        params.k = static_cast<int>(rng.below(4));
        params.c = 1 + static_cast<int>(rng.below(5));
        params.grid_w = params.grid_h = 25;
        params.seed = rng.next();
        const Instance instance = generate(params);
        REQUIRE(instance.n() == params.n);
        CHECK(validate_instance(instance).ok());
        CHECK(instance.c <= params.c);
        const BoundingBox box{params.grid_w, params.grid_h};
        for (const auto& path : instance.paths)
            CHECK(validate_path(path, params.k, box).ok());
    }
}

TEST_CASE("weights honor the requested range") {
    GenParams params;
    params.n = 60;
    params.k = 1;
    params.c = 2;
    params.grid_w = params.grid_h = 30;
    params.weight_min = 10;
    params.weight_max = 12;
    params.seed = 99;
    const Instance instance = generate(params);
    for (const auto& path : instance.paths) {
        CHECK(path.weight >= Rational(10));
        CHECK(path.weight <= Rational(12));
    }
}

TEST_CASE("ids are sequential from zero") {
    GenParams params;
    params.n = 9;
    params.seed = 3;
    const Instance instance = generate(params);
    for (int i = 0; i < instance.n(); ++i) CHECK(instance.paths[i].id == i);
}

TEST_CASE("bad parameters are rejected") {
    GenParams params;
    params.n = 0;
    CHECK_THROWS_AS(generate(params), std::invalid_argument);

    params = {};
    params.k = -1;
    CHECK_THROWS_AS(generate(params), std::invalid_argument);

    params = {};
    params.c = 0;
    CHECK_THROWS_AS(generate(params), std::invalid_argument);

    params = {};
    params.weight_min = 5;
    params.weight_max = 4;
    CHECK_THROWS_AS(generate(params), std::invalid_argument);

    params = {};
    params.k = 3;
    params.c = 5;
    params.grid_w = params.grid_h = 19;  // needs c*(k+1) = 20
    CHECK_THROWS_AS(generate(params), GenerationFailed);
}

TEST_CASE("tight grids still generate through the shrink ladder") {
    // Exactly the minimum grid; placements fail often, the retry and shrink
    // rules must keep generation total.
    GenParams params;
    params.n = 120;
    params.k = 2;
    params.c = 2;
    params.grid_w = params.grid_h = 6;
    params.seed = 1234;
    const Instance instance = generate(params);
    CHECK(instance.n() == 120);
    CHECK(validate_instance(instance).ok());
}
