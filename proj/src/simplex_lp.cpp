#include "infosum/simplex_lp.hpp"

#include <cmath>
#include <limits>

#include "infosum/errors.hpp"

namespace infosum {

LpResult simplex_maximize(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b,
                          const std::vector<double>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (double bi : b)
        if (bi < 0.0) throw error("simplex: b must be >= 0");
    if (b.size() != m) throw error("simplex: shape mismatch");

    // Tableau: m rows of [A | I | b], plus objective row of reduced costs.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<double>> T(m, std::vector<double>(cols, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw error("simplex: shape mismatch");
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1.0;
        T[i][cols - 1] = b[i];
    }
    std::vector<double> z(cols, 0.0);  // objective row: c_j - z_j form
    for (std::size_t j = 0; j < n; ++j) z[j] = c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    const double eps = 1e-12;
    for (std::size_t iter = 0; iter < 100000; ++iter) {
        // Bland: entering = lowest-index column with positive reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (z[j] > eps) {
                enter = j;
                break;
            }
        if (enter == cols) break;  // optimal

        // Leaving: min ratio; ties resolved by lowest basis index (Bland).
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= eps) continue;
            const double ratio = T[i][cols - 1] / T[i][enter];
            if (ratio < best - eps ||
                (ratio < best + eps && (leave == m || basis[i] < basis[leave]))) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) throw error("simplex: objective unbounded");

        // Pivot.
        const double piv = T[leave][enter];
        for (double& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = T[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
        }
        const double fz = z[enter];
        for (std::size_t j = 0; j < cols; ++j) z[j] -= fz * T[leave][j];
        basis[leave] = enter;
    }

    LpResult r;
    r.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) r.x[basis[i]] = T[i][cols - 1];
    r.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) r.objective += c[j] * r.x[j];
    return r;
}

}  // namespace infosum
