// Test-only LP oracle: enumerate every basic solution of
//   max c.x  s.t.  Ax <= 1, x >= 0
// by solving all square systems of n tight constraints, keep the feasible
// ones, and report the best objective. Exponential, for tiny LPs only;
// entirely independent of the simplex implementation under test.
#pragma once

#include "vpgmis/lp.hpp"
#include "vpgmis/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace vpgmis::testing {

// Solves M z = rhs by Gauss-Jordan over rationals; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);

        const Rational inv = m[col][col];
        for (size_t j = 0; j < n; ++j) m[col][j] /= inv;
        rhs[col] /= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational factor = m[row][col];
            for (size_t j = 0; j < n; ++j) m[row][j] -= factor * m[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

struct BruteLpResult {
    Rational objective = 0;
    std::vector<Rational> x;                        // one optimal vertex
    std::vector<std::vector<Rational>> optimal_xs;  // every optimal vertex, deduped
};

// max_systems caps the C(rows + n, n) enumeration; exceeding it throws so a
// test never silently burns hours.
inline BruteLpResult brute_force_lp(const LpProblem& lp, size_t max_systems = 2000000) {
    const size_t n = static_cast<size_t>(lp.num_vars);
    const size_t total = lp.rows.size() + n;  // rows, then x_j >= 0 as x_j = 0

    // Constraint row i as a dense normal vector and rhs.
    std::vector<std::vector<Rational>> normals(total, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(total, Rational(0));
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        for (int j : lp.rows[i].support) normals[i][static_cast<size_t>(j)] = 1;
        rhs[i] = 1;
    }
    for (size_t j = 0; j < n; ++j) normals[lp.rows.size() + j][j] = 1;  // x_j = 0

    size_t count = 1;
    for (size_t i = 0; i < n; ++i) {
        count = count * (total - i) / (i + 1);
        if (count > max_systems) throw std::invalid_argument("brute_force_lp: too large");
    }

    BruteLpResult best;
    bool found = false;

    std::vector<size_t> pick(n);
    for (size_t i = 0; i < n; ++i) pick[i] = i;

    const auto advance = [&]() -> bool {
        size_t i = n;
        while (i > 0) {
            --i;
            if (pick[i] + (n - i) < total) {
                ++pick[i];
                for (size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    if (n == 0) return best;

    do {
        std::vector<std::vector<Rational>> m(n);
        std::vector<Rational> r(n);
        for (size_t i = 0; i < n; ++i) {
            m[i] = normals[pick[i]];
            r[i] = pick[i] < lp.rows.size() ? rhs[pick[i]] : Rational(0);
        }
        const auto x = solve_square(std::move(m), std::move(r));
        if (!x) continue;

        bool feasible = true;
        for (size_t j = 0; feasible && j < n; ++j) feasible = (*x)[j] >= 0;
        for (size_t i = 0; feasible && i < lp.rows.size(); ++i) {
            Rational sum = 0;
            for (int j : lp.rows[i].support) sum += (*x)[static_cast<size_t>(j)];
            feasible = sum <= 1;
        }
        if (!feasible) continue;

        Rational objective = 0;
        for (size_t j = 0; j < n; ++j) objective += lp.objective[j] * (*x)[j];

        if (!found || objective > best.objective) {
            found = true;
            best.objective = objective;
            best.x = *x;
            best.optimal_xs.assign(1, *x);
        } else if (objective == best.objective) {
            bool fresh = true;
            for (const auto& seen : best.optimal_xs) fresh = fresh && seen != *x;
            if (fresh) best.optimal_xs.push_back(*x);
        }
    } while (advance());

    if (!found) throw std::logic_error("brute_force_lp: no feasible vertex, yet 0 is one");
    return best;
}

}  // namespace vpgmis::testing
