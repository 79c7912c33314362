#pragma once

#include <cstdint>
#include <vector>

#include "infosum/inequality_verifiers.hpp"

namespace infosum {

struct CltSweepRow {
    int n = 0;
    double entropy = 0.0;
    double fisher = 0.0;  // +inf when the score is undefined at this n
    double entropy_power = 0.0;
    double rel_entropy_gaussian = 0.0;
    double variance = 0.0;
    double gap_prev = 0.0;  // entropy(n) - entropy(n-1); 0 for the first row
    bool fisher_defined = true;
    bool entropy_nondecreasing = true;  // gap_prev >= -monotonicity_band
    bool fisher_nonincreasing = true;
};

struct CltSweepResult {
    std::vector<CltSweepRow> rows;
    static constexpr double monotonicity_band = 1e-4;
};

// Standardized i.i.d. sums Y_n = (X_1 + ... + X_n)/sqrt(n) for n = 1..n_max,
// built by repeated self-convolution then exact rescaling. smooth_t > 0
// pre-smooths the base density by heat_perturb (needed before Fisher
// information of densities with jumps means anything). 2 <= n_max <= 12.
CltSweepResult iid_info_sequence(const DistributionSpec& spec, int n_max,
                                 double smooth_t = 0.0, GridConfig config = {});

// For balanced C: compares each of H, 1/I, N of the standardized total
// V_n = T_n/sqrt(v_n) against the eta-weighted average over standardized
// subset sums V^(s) = T^(s)/sqrt(v_s), eta_s = v_s/(r v_n). The report's
// lhs/rhs/gap are the entropy variant; the other two live in metadata and
// all three must hold for satisfied. Unbalanced C → precondition_violation.
InequalityReport monotone_on_average(const SumSystem& sys,
                                     const SubsetCollection& c,
                                     Tolerance tol = {});

struct ProjectionGapResult {
    double gap = 0.0;             // E[(sum_s w_s rho_s(T^(s)) - rho(T_n))^2]
    double combo_second_moment = 0.0;  // E[(sum_s w_s rho_s(T^(s)))^2]
    std::uint64_t seed = 0;
    int points = 0;
};

// Quasi-Monte Carlo estimate over a shifted Halton point set mapped through
// the per-coordinate inverse CDFs. Deterministic for fixed seed.
ProjectionGapResult projection_gap_detail(const SumSystem& sys,
                                          const SubsetCollection& c,
                                          const WeightVector& w,
                                          int points = 4096,
                                          std::uint64_t seed = 0);

double projection_gap(const SumSystem& sys, const SubsetCollection& c,
                      const WeightVector& w, int points = 4096,
                      std::uint64_t seed = 0);

// Halton radical-inverse in the given base for index >= 0.
double halton_point(std::uint64_t index, std::uint64_t base);

}  // namespace infosum
