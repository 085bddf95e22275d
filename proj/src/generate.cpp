#include "vpgmis/generate.hpp"

#include "vpgmis/errors.hpp"

#include <optional>
#include <unordered_set>

namespace vpgmis {

namespace {

// One placement attempt: uniform start, uniform bend count in [0, bends_max],
// alternating axes, segment lengths uniform in [1, len_max]. Fails on a
// bounds violation or a revisited point.
std::optional<std::vector<GridPoint>> try_place(Xorshift64Star& rng, int bends_max,
                                                int len_max, int grid_w, int grid_h) {
    GridPoint cursor{static_cast<int>(rng.below(grid_w + 1)),
                     static_cast<int>(rng.below(grid_h + 1))};
    const int bends = static_cast<int>(rng.below(bends_max + 1));
    int axis = static_cast<int>(rng.below(2));  // 0 horizontal, 1 vertical

    std::vector<GridPoint> vertices{cursor};
    std::unordered_set<uint64_t> covered{cursor.key()};

    for (int seg = 0; seg <= bends; ++seg) {
        const int length = 1 + static_cast<int>(rng.below(len_max));
        const int sign = rng.below(2) ? 1 : -1;
        for (int step = 0; step < length; ++step) {
            if (axis == 0)
                cursor.x += sign;
            else
                cursor.y += sign;
            if (cursor.x < 0 || cursor.x > grid_w || cursor.y < 0 || cursor.y > grid_h)
                return std::nullopt;
            if (!covered.insert(cursor.key()).second) return std::nullopt;
        }
        vertices.push_back(cursor);
        axis ^= 1;  // forced alternation keeps every breakpoint a true bend
    }
    return vertices;
}

}  // namespace

Instance generate(const GenParams& params) {
    if (params.n < 1) throw std::invalid_argument("n must be >= 1");
    if (params.k < 0) throw std::invalid_argument("k must be >= 0");
    if (params.c < 1) throw std::invalid_argument("c must be >= 1");
    if (params.weight_min > params.weight_max)
        throw std::invalid_argument("weight range is empty");
    const long long reach = static_cast<long long>(params.c) * (params.k + 1);
    if (params.grid_w < reach || params.grid_h < reach)
        throw GenerationFailed("GenerationFailed: grid too small, needs at least " +
                               std::to_string(reach) + " in each dimension");

    Xorshift64Star rng(params.seed);
    std::vector<GridPath> paths;
    paths.reserve(params.n);

    for (int id = 0; id < params.n; ++id) {
        std::optional<std::vector<GridPoint>> placed;
        for (int attempt = 0; attempt < 100 && !placed; ++attempt)
            placed = try_place(rng, params.k, params.c, params.grid_w, params.grid_h);
        // Shrink to unit straight segments, then to a single point; a point
        // always fits, so generation is total on a valid grid.
        for (int attempt = 0; attempt < 100 && !placed; ++attempt)
            placed = try_place(rng, 0, 1, params.grid_w, params.grid_h);
        if (!placed) {
            placed = std::vector<GridPoint>{
                {static_cast<int>(rng.below(params.grid_w + 1)),
                 static_cast<int>(rng.below(params.grid_h + 1))}};
        }

        GridPath path;
        path.id = id;
        path.vertices = std::move(*placed);
        path.weight = Rational(rng.in_range(params.weight_min, params.weight_max));
        paths.push_back(std::move(path));
    }
    return make_instance(params.k, std::move(paths));
}

}  // namespace vpgmis
