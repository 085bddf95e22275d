#include "vpgmis/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace vpgmis {

namespace {

bool lex_smaller(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BranchSolver {
    const std::vector<uint64_t>& adj;       // adjacency masks over candidates
    const std::vector<Rational>& weights;   // indexed by candidate slot
    const std::vector<int>& positions;      // slot -> original position

    Rational best_weight = 0;
    std::vector<int> best_set;              // original positions, sorted

    void consider(uint64_t chosen_mask, const Rational& weight) {
        std::vector<int> set;
        for (uint64_t bits = chosen_mask; bits; bits &= bits - 1)
            set.push_back(positions[std::countr_zero(bits)]);
        std::sort(set.begin(), set.end());
        if (weight > best_weight ||
            (weight == best_weight && lex_smaller(set, best_set))) {
            best_weight = weight;
            best_set = std::move(set);
        }
    }

    // remaining: candidate slots still undecided; chosen: slots in the set.
    void recurse(uint64_t remaining, uint64_t chosen, const Rational& weight,
                 const Rational& remaining_weight) {
        // Prune strictly so equal-weight optima stay reachable for the
        // lexicographic tie-break.
        if (weight + remaining_weight < best_weight) return;
        if (remaining == 0) {
            consider(chosen, weight);
            return;
        }

        // Highest-degree vertex within the remaining subgraph.
        int pick = -1;
        int pick_degree = -1;
        for (uint64_t bits = remaining; bits; bits &= bits - 1) {
            const int i = std::countr_zero(bits);
            const int degree = std::popcount(adj[i] & remaining);
            if (degree > pick_degree) {
                pick_degree = degree;
                pick = i;
            }
        }

        const uint64_t bit = uint64_t{1} << pick;

        // Include pick: drop its closed neighborhood.
        {
            const uint64_t removed = remaining & (adj[pick] | bit);
            Rational lost = 0;
            for (uint64_t bits = removed; bits; bits &= bits - 1)
                lost += weights[std::countr_zero(bits)];
            recurse(remaining & ~removed, chosen | bit, weight + weights[pick],
                    remaining_weight - lost);
        }
        // Exclude pick.
        recurse(remaining & ~bit, chosen, weight, remaining_weight - weights[pick]);
    }
};

}  // namespace

ExactResult exact_mwis(const IntersectionGraph& graph,
                       const std::vector<Rational>& weights, int cap) {
    if (graph.n > cap)
        throw std::invalid_argument("TooLarge: n=" + std::to_string(graph.n) +
                                    " exceeds exact solver cap " + std::to_string(cap));
    if (static_cast<int>(weights.size()) != graph.n)
        throw std::invalid_argument("weights size does not match graph");

    // Keep only positive-weight vertices; zero or negative never help.
    std::vector<int> positions;
    for (int v = 0; v < graph.n; ++v)
        if (weights[v] > 0) positions.push_back(v);
    if (positions.size() > 64)
        throw std::invalid_argument("TooLarge: more than 64 positive-weight vertices");

    std::vector<int> slot_of(graph.n, -1);
    for (size_t i = 0; i < positions.size(); ++i) slot_of[positions[i]] = static_cast<int>(i);

    std::vector<uint64_t> adj(positions.size(), 0);
    std::vector<Rational> w(positions.size());
    Rational total = 0;
    for (size_t i = 0; i < positions.size(); ++i) {
        w[i] = weights[positions[i]];
        total += w[i];
        for (int nb : graph.adjacency[positions[i]]) {
            if (slot_of[nb] >= 0) adj[i] |= uint64_t{1} << slot_of[nb];
        }
    }

    BranchSolver solver{adj, w, positions, Rational(0), {}};
    const uint64_t all = positions.empty()
                             ? 0
                             : (positions.size() == 64 ? ~uint64_t{0}
                                                       : (uint64_t{1} << positions.size()) - 1);
    solver.recurse(all, 0, 0, total);

    return {std::move(solver.best_set), std::move(solver.best_weight)};
}

ExactResult exact_mwis_bitmask(const IntersectionGraph& graph,
                               const std::vector<Rational>& weights) {
    if (graph.n > 20)
        throw std::invalid_argument("TooLarge: bitmask sweep limited to n <= 20");
    if (static_cast<int>(weights.size()) != graph.n)
        throw std::invalid_argument("weights size does not match graph");

    std::vector<int> positions;
    for (int v = 0; v < graph.n; ++v)
        if (weights[v] > 0) positions.push_back(v);
    const int m = static_cast<int>(positions.size());

    std::vector<uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (i != j && graph.adjacent(positions[i], positions[j]))
                adj[i] |= uint32_t{1} << j;
    }

    // independent[mask] via lowest-bit recurrence.
    std::vector<uint8_t> independent(size_t{1} << m, 0);
    independent[0] = 1;

    ExactResult best;
    for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
        const int low = std::countr_zero(mask);
        const uint32_t rest = mask & (mask - 1);
        independent[mask] = independent[rest] && !(adj[low] & rest);
        if (!independent[mask]) continue;

        Rational weight = 0;
        std::vector<int> set;
        for (int i = 0; i < m; ++i) {
            if (mask & (uint32_t{1} << i)) {
                weight += weights[positions[i]];
                set.push_back(positions[i]);
            }
        }
        std::sort(set.begin(), set.end());
        if (weight > best.best_weight ||
            (weight == best.best_weight && lex_smaller(set, best.best_set))) {
            best.best_weight = weight;
            best.best_set = std::move(set);
        }
    }
    return best;
}

}  // namespace vpgmis
