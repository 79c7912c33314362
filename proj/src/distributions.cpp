#include "infosum/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

namespace infosum {

void GridConfig::validate() const {
    if (!(half_width_sigmas >= 6.0))
        throw config_error("grid half width must be >= 6 sigmas");
    if (points < 1024 || (points & (points - 1)) != 0)
        throw config_error("grid points must be a power of two >= 1024");
}

void DistributionSpec::validate() const {
    if (family == "gaussian") {
        if (!(variance > 0.0) || !std::isfinite(variance) || !std::isfinite(mean))
            throw config_error("gaussian: variance must be > 0 and finite");
    } else if (family == "uniform") {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw config_error("uniform: need a < b, both finite");
    } else if (family == "gaussian_mixture") {
        if (components.empty())
            throw config_error("gaussian_mixture: needs at least one component");
        double wsum = 0.0;
        for (const auto& c : components) {
            if (!(c.weight > 0.0) || !(c.variance > 0.0) || !std::isfinite(c.mean))
                throw config_error(
                    "gaussian_mixture: weights and variances must be > 0");
            wsum += c.weight;
        }
        if (std::abs(wsum - 1.0) > 1e-12)
            throw config_error("gaussian_mixture: weights must sum to 1");
    } else if (family == "tabulated") {
        if (!(dx > 0.0) || values.size() < GridDensity::min_points)
            throw config_error("tabulated: need dx > 0 and >= 16 values");
    } else {
        throw config_error("unknown distribution family '" + family + "'");
    }
}

DistributionSpec DistributionSpec::gaussian(double mean, double variance) {
    DistributionSpec s;
    s.family = "gaussian";
    s.mean = mean;
    s.variance = variance;
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
    DistributionSpec s;
    s.family = "uniform";
    s.a = a;
    s.b = b;
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::mixture(std::vector<MixtureComponent> comps) {
    DistributionSpec s;
    s.family = "gaussian_mixture";
    s.components = std::move(comps);
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::tabulated(double x0, double dx,
                                             std::vector<double> v) {
    DistributionSpec s;
    s.family = "tabulated";
    s.x0 = x0;
    s.dx = dx;
    s.values = std::move(v);
    s.validate();
    return s;
}

namespace {

GridDensity clamped_normalized_table(const DistributionSpec& spec) {
    GridDensity d;
    d.x0 = spec.x0;
    d.dx = spec.dx;
    d.values = spec.values;
    bool clamped = false;
    for (double& v : d.values)
        if (v < 0.0) {
            v = 0.0;
            clamped = true;
        }
    if (clamped)
        std::cerr << "warning: tabulated density had negative entries; "
                     "clamped to 0\n";
    d.validate();
    return normalize(std::move(d));
}

}  // namespace

double spec_mean(const DistributionSpec& spec) {
    spec.validate();
    if (spec.family == "gaussian") return spec.mean;
    if (spec.family == "uniform") return 0.5 * (spec.a + spec.b);
    if (spec.family == "gaussian_mixture") {
        double m = 0.0;
        for (const auto& c : spec.components) m += c.weight * c.mean;
        return m;
    }
    return mean(clamped_normalized_table(spec));
}

double spec_variance(const DistributionSpec& spec) {
    spec.validate();
    if (spec.family == "gaussian") return spec.variance;
    if (spec.family == "uniform") {
        const double w = spec.b - spec.a;
        return w * w / 12.0;
    }
    if (spec.family == "gaussian_mixture") {
        const double m = spec_mean(spec);
        double v = 0.0;
        for (const auto& c : spec.components) {
            const double d = c.mean - m;
            v += c.weight * (c.variance + d * d);
        }
        return v;
    }
    return variance(clamped_normalized_table(spec));
}

double gaussian_pdf(double x, double mean, double variance) {
    const double z = x - mean;
    return std::exp(-0.5 * z * z / variance) /
           std::sqrt(2.0 * std::numbers::pi * variance);
}

GridDensity build_density(const DistributionSpec& spec, const GridConfig& config) {
    spec.validate();
    config.validate();

    if (spec.family == "tabulated") {
        const GridDensity raw = clamped_normalized_table(spec);
        const Moments m = moments(raw);
        const double half = config.half_width_sigmas * std::sqrt(m.variance);
        const double step = 2.0 * half / static_cast<double>(config.points);
        return normalize(
            resample(raw, m.mean - half, step, config.points));
    }

    const double center = spec_mean(spec);
    const double sigma = std::sqrt(spec_variance(spec));

    // Half width: enough to cover every component's own tail region too.
    double half = config.half_width_sigmas * sigma;
    if (spec.family == "gaussian_mixture")
        for (const auto& c : spec.components)
            half = std::max(half, std::abs(c.mean - center) +
                                      config.half_width_sigmas * std::sqrt(c.variance));

    GridDensity d;
    d.dx = 2.0 * half / static_cast<double>(config.points);
    d.x0 = center - half;  // center sits exactly on node points/2
    d.values.assign(config.points, 0.0);

    if (spec.family == "gaussian") {
        for (std::size_t k = 0; k < config.points; ++k)
            d.values[k] = gaussian_pdf(d.x(k), spec.mean, spec.variance);
    } else if (spec.family == "gaussian_mixture") {
        for (std::size_t k = 0; k < config.points; ++k) {
            double v = 0.0;
            for (const auto& c : spec.components)
                v += c.weight * gaussian_pdf(d.x(k), c.mean, c.variance);
            d.values[k] = v;
        }
    } else {  // uniform: exact cell averages, edge cells get partial mass
        const double inv_len = 1.0 / (spec.b - spec.a);
        for (std::size_t k = 0; k < config.points; ++k) {
            const double lo = std::max(d.x(k) - 0.5 * d.dx, spec.a);
            const double hi = std::min(d.x(k) + 0.5 * d.dx, spec.b);
            if (hi > lo) d.values[k] = (hi - lo) / d.dx * inv_len;
        }
    }
    return normalize(std::move(d));
}

}  // namespace infosum
