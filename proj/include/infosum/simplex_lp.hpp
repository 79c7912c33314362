#pragma once

#include <vector>

namespace infosum {

struct LpResult {
    std::vector<double> x;
    double objective = 0.0;
};

// Maximize c.x subject to A x <= b, x >= 0, with b >= 0 (so the slack basis
// is feasible). Dense tableau simplex with Bland's rule: deterministic and
// cycle-free. Returns an optimal vertex. Throws error if unbounded or if
// some b entry is negative.
LpResult simplex_maximize(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace infosum
