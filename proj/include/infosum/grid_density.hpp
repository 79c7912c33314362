#pragma once

#include <cstddef>
#include <vector>

#include "infosum/errors.hpp"

namespace infosum {

// A probability density sampled on a uniform grid x_k = x0 + k*dx.
// Mass and moments are trapezoid-rule integrals over [x0, x0+(K-1)*dx];
// a density is "normalized" when mass() == 1 within tol_mass.
struct GridDensity {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;

    static constexpr double tol_mass = 1e-9;
    static constexpr std::size_t min_points = 16;

    std::size_t size() const { return values.size(); }
    double x(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
    double x_last() const { return x(size() - 1); }
    double span() const { return static_cast<double>(size() - 1) * dx; }

    // Throws invalid_density_error if shape constraints are broken
    // (dx <= 0, fewer than min_points samples, negative or non-finite values).
    void validate() const;

    bool is_normalized() const;
};

struct Moments {
    double mass;
    double mean;
    double variance;
};

// Trapezoid-rule integral of `values` against step dx.
double trapezoid(const std::vector<double>& values, double dx);

double mass(const GridDensity& d);
Moments moments(const GridDensity& d);
double mean(const GridDensity& d);
double variance(const GridDensity& d);
double peak(const GridDensity& d);

// Rescale values so mass becomes exactly 1. Throws invalid_density_error
// if the mass is zero, negative, or non-finite.
GridDensity normalize(GridDensity d);

// Density of a*X for X ~ d, a != 0: exact grid remap
// (x0' = a*x0, dx' = |a|*dx, values' = values/|a|, reversed when a < 0).
// Throws domain_error when a == 0.
GridDensity scale_density(const GridDensity& d, double a);

// Linear-interpolation resample onto a prescribed grid (zero outside the
// source support). Does not renormalize.
GridDensity resample(const GridDensity& d, double x0, double dx, std::size_t n);

// Density of X+Y for independent X ~ a, Y ~ b, both normalized.
// Steps are reconciled by resampling the coarser operand to the finer dx;
// the linear convolution runs over FFT, tiny negative ringing is clamped,
// tails below 1e-14 * peak are trimmed, and the result is renormalized.
// Throws resolution_error when spans differ by more than 1e6 or the
// reconciled grid would exceed the memory cap.
GridDensity convolve(const GridDensity& a, const GridDensity& b);

// Raw linear convolution of two sample sequences (FFT-backed, output length
// a.size()+b.size()-1, no grid bookkeeping, no dx scaling).
std::vector<double> linear_convolve(const std::vector<double>& a,
                                    const std::vector<double>& b);

// Grid-point cap for any single density produced by resampling/convolution.
inline constexpr std::size_t max_grid_points = std::size_t{1} << 21;

}  // namespace infosum
