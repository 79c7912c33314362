#pragma once

#include <vector>

#include "infosum/grid_density.hpp"

namespace infosum {

// ρ(x) = f'(x)/f(x) on the source grid. Entries are only meaningful where
// valid[k] != 0: central differences are trusted there (f above threshold
// and both neighbours on-grid); elsewhere values[k] == 0.
struct ScoreFunction {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;
    std::vector<char> valid;

    static constexpr double tol_score = 1e-3;

    std::size_t size() const { return values.size(); }
    double x(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }

    // Linear interpolation of ρ at x, clamped to the nearest valid stretch.
    double at(double x) const;
};

struct InfoSummary {
    double entropy;
    double fisher;
    double entropy_power;          // exp(2*entropy)
    double rel_entropy_gaussian;   // 0.5*log(2*pi*e*variance) - entropy
    double variance;
};

// A density together with the Gaussian variance already added to it.
struct HeatPath {
    GridDensity base;
    double t = 0.0;
    GridDensity density;  // convolve(base, N(0,t)) for t > 0, else base
};

// -E[log f(X)] in nats, trapezoid rule with 0*log 0 := 0.
double entropy(const GridDensity& d);

// Central-difference score (taken in log f, which is exact on Gaussian
// stretches) where f >= 1e-12 * peak. Throws
// score_undefined_error when more than half the probability mass sits in the
// invalid region, or when the density jumps at grid scale (max adjacent
// |Δf| > 0.15 * peak) — such densities are not absolutely continuous as far
// as the grid can tell; pre-smooth with heat_perturb first.
ScoreFunction score(const GridDensity& d);

// E[ρ²(X)] over the valid region.
double fisher_information(const GridDensity& d);

InfoSummary info_summary(const GridDensity& d);

double entropy_power(const GridDensity& d);
double rel_entropy_gaussian(const GridDensity& d);

// Density of X + sqrt(t) Z, Z standard normal. When sqrt(t) is small
// relative to the grid step the input is resampled finer so the kernel is
// resolved. Throws domain_error for t <= 0.
GridDensity heat_perturb(const GridDensity& d, double t);

HeatPath heat_path(const GridDensity& d, double t);

// Entropy via the heat-flow identity: 0.5*log(2*pi*e) minus half the
// integral of [I(X_t) - 1/(1+t)] over t in [0, t_max], with the analytic
// tail 0.5*log((1+t_max)/(v+t_max)) appended, v = variance(d). Adaptive
// Gauss-Legendre in log t under a budget of n_nodes Fisher evaluations;
// the [0, t_min] head is handled by an a/sqrt(t)+b fit so densities whose
// Fisher information blows up like 1/sqrt(t) (e.g. raw uniforms) still
// integrate correctly. Throws domain_error for t_max <= 0.
double de_bruijn_entropy(const GridDensity& d, double t_max = 50.0,
                         int n_nodes = 160);

// Max absolute deviation between the direct score of the sum density and
// the projected score E[ρ1(V1) | V1+V2 = v], over the region where the sum
// density is >= 1e-6 of its peak. score(d1) must be defined.
double score_convolution_check(const GridDensity& d1, const GridDensity& d2);

}  // namespace infosum
