#ifndef GANZ_SIMPLEX_HPP
#define GANZ_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "ganz/rational.hpp"

namespace ganz {

// Exact feasibility of  A x = b, x >= 0  over the rationals: phase-1
// simplex with Bland's rule (no cycling, fully deterministic).
// Returns a feasible x or nothing when the system is infeasible.
inline std::optional<std::vector<Rat>> solve_nonneg(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0) return std::vector<Rat>(n, Rat(0));

    // rows with negative rhs are flipped so artificials start feasible
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(b[i]) < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    }

    // tableau: n structural columns, m artificial columns, rhs
    const std::size_t cols = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = Rat(1);
        t[i][cols] = b[i];
        basis[i] = n + i;
    }

    // reduced costs for "minimize sum of artificials"
    std::vector<Rat> red(cols + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < n || j == cols) red[j] -= t[i][j];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(red[j]) < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        if (enter == cols) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rat ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;  // unbounded phase-1 cannot happen; treat as infeasible

        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = red[enter];
        if (sgn(f) != 0)
            for (std::size_t j = 0; j <= cols; ++j) red[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    // objective value is -red[cols]; zero means every artificial was driven out
    if (sgn(red[cols]) != 0) return std::nullopt;

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][cols];
    return x;
}

} // namespace ganz

#endif
