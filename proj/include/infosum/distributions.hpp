#pragma once

#include <string>
#include <vector>

#include "infosum/grid_density.hpp"

namespace infosum {

// How parametric families get discretized.
//   half_width_sigmas: grid reaches this many standard deviations either side
//                      of the center (>= 6).
//   points:            grid size, a power of two >= 1024.
struct GridConfig {
    double half_width_sigmas = 8.0;
    std::size_t points = 4096;

    void validate() const;
};

struct MixtureComponent {
    double weight;
    double mean;
    double variance;
};

// A distribution to discretize. `family` selects which fields matter:
//   "gaussian":          mean, variance (> 0)
//   "uniform":           a < b
//   "gaussian_mixture":  components (weights > 0 summing to 1, variances > 0)
//   "tabulated":         x0, dx, values (negatives are clamped to 0, the table
//                        is normalized, then resampled onto the configured grid)
struct DistributionSpec {
    std::string family;
    double mean = 0.0;
    double variance = 1.0;
    double a = 0.0;
    double b = 1.0;
    std::vector<MixtureComponent> components;
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;

    void validate() const;  // throws config_error

    static DistributionSpec gaussian(double mean, double variance);
    static DistributionSpec uniform(double a, double b);
    static DistributionSpec mixture(std::vector<MixtureComponent> comps);
    static DistributionSpec tabulated(double x0, double dx, std::vector<double> v);
};

// Analytic moments of a distribution (for tabulated: trapezoid moments of the
// clamped, normalized table).
double spec_mean(const DistributionSpec& spec);
double spec_variance(const DistributionSpec& spec);

// Discretize per the grid config. Parametric families land on a grid whose
// midpoint node is the distribution center; uniforms use exact cell averages
// so edge cells carry the right partial mass. Result is normalized.
GridDensity build_density(const DistributionSpec& spec,
                          const GridConfig& config = {});

double gaussian_pdf(double x, double mean, double variance);

}  // namespace infosum
