// Dense-tableau primal simplex with Bland's rule, usable with exact
// rationals (tol = 0) or doubles (tol > 0). Restricted to problems of the
// form max c.x s.t. Ax <= b, x >= 0 with b >= 0, so the slack basis is a
// feasible start and no phase-one is needed.
#pragma once

#include "vpgmis/errors.hpp"

#include <cstddef>
#include <vector>

namespace vpgmis {

template <typename S>
struct SimplexOutcome {
    std::vector<S> x;  // structural variable values
    S objective;       // c.x, recomputed from x after the final pivot
    long iterations = 0;
};

template <typename S>
SimplexOutcome<S> simplex_maximize(const std::vector<std::vector<S>>& a,
                                   const std::vector<S>& b, const std::vector<S>& c,
                                   const S& tol, long max_iterations = 200000) {
    const size_t m = a.size();
    const size_t n = c.size();
    const size_t cols = n + m;

    // Tableau rows carry structural columns, slack columns, and the rhs.
    std::vector<std::vector<S>> rows(m, std::vector<S>(cols, S(0)));
    std::vector<S> rhs(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) rows[i][j] = a[i][j];
        rows[i][n + i] = S(1);
        rhs[i] = b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost row (z - c): optimal once every entry >= -tol.
    std::vector<S> reduced(cols, S(0));
    for (size_t j = 0; j < n; ++j) reduced[j] = -c[j];

    SimplexOutcome<S> outcome;
    for (;;) {
        // Bland entering rule: smallest column index with negative reduced cost.
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j) {
            if (reduced[j] < -tol) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;  // optimal

        // Ratio test; ties resolved toward the smallest basis index.
        size_t leave = m;
        S best_ratio(0);
        for (size_t i = 0; i < m; ++i) {
            if (rows[i][enter] > tol) {
                S ratio = rhs[i] / rows[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m)
            throw std::logic_error(
                "Unbounded: simplex column without bound; every variable is "
                "box-constrained, so this is a construction bug");

        if (++outcome.iterations > max_iterations)
            throw NumericalFailure("simplex iteration limit reached");

        // Pivot.
        auto& prow = rows[leave];
        const S pivot = prow[enter];
        for (auto& entry : prow) entry /= pivot;
        rhs[leave] /= pivot;
        prow[enter] = S(1);

        for (size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const S factor = rows[i][enter];
            if (factor == S(0)) continue;
            auto& row = rows[i];
            for (size_t j = 0; j < cols; ++j) row[j] -= factor * prow[j];
            row[enter] = S(0);
            rhs[i] -= factor * rhs[leave];
        }
        {
            const S factor = reduced[enter];
            if (factor != S(0)) {
                for (size_t j = 0; j < cols; ++j) reduced[j] -= factor * prow[j];
                reduced[enter] = S(0);
            }
        }
        basis[leave] = enter;
    }

    outcome.x.assign(n, S(0));
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) outcome.x[basis[i]] = rhs[i];
    }
    outcome.objective = S(0);
    for (size_t j = 0; j < n; ++j) outcome.objective += c[j] * outcome.x[j];
    return outcome;
}

}  // namespace vpgmis
