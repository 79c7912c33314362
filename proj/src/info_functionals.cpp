#include "infosum/info_functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "infosum/distributions.hpp"

namespace infosum {

namespace {

constexpr double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;

void require_normalized(const GridDensity& d, const char* who) {
    d.validate();
    if (!d.is_normalized())
        throw invalid_density_error(std::string(who) +
                                    ": density is not normalized (mass = " +
                                    std::to_string(mass(d)) + ")");
}

}  // namespace

double ScoreFunction::at(double xq) const {
    const std::size_t n = values.size();
    double t = (xq - x0) / dx;
    t = std::clamp(t, 0.0, static_cast<double>(n - 1));
    auto k = static_cast<std::size_t>(t);
    if (k + 1 >= n) k = n - 2;
    // Snap to the nearest valid stretch; interpolate only between valid nodes.
    std::size_t a = k, b = k + 1;
    while (a > 0 && !valid[a]) --a;
    while (b + 1 < n && !valid[b]) ++b;
    if (!valid[a] && !valid[b]) return 0.0;
    if (!valid[a]) return values[b];
    if (!valid[b]) return values[a];
    if (a == k && b == k + 1) {
        const double frac = t - static_cast<double>(k);
        return values[a] * (1.0 - frac) + values[b] * frac;
    }
    // Query fell in an invalid gap: take the closer endpoint.
    const double xa = x(a), xb = x(b);
    return (xq - xa <= xb - xq) ? values[a] : values[b];
}

double entropy(const GridDensity& d) {
    require_normalized(d, "entropy");
    std::vector<double> integrand(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double f = d.values[i];
        if (f > 0.0) integrand[i] = -f * std::log(f);
    }
    return trapezoid(integrand, d.dx);
}

ScoreFunction score(const GridDensity& d) {
    require_normalized(d, "score");
    const std::size_t n = d.size();
    const double pk = peak(d);

    // A jump at grid scale means f' is a delta as far as this grid can tell.
    double max_step = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        max_step = std::max(max_step, std::abs(d.values[i + 1] - d.values[i]));
    if (max_step > 0.15 * pk)
        throw score_undefined_error(
            "score: density jumps at grid scale (max step " +
            std::to_string(max_step / pk) +
            " of peak); not absolutely continuous at this resolution — "
            "pre-smooth with heat_perturb");

    ScoreFunction s;
    s.x0 = d.x0;
    s.dx = d.dx;
    s.values.assign(n, 0.0);
    s.valid.assign(n, 0);

    // f'/f = (log f)': the log-space central difference is exact for
    // Gaussian stretches and keeps the truncation error well below tol even
    // in far tails where f'''/f blows up.
    const double floor_val = 1e-12 * pk;
    double invalid_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        if (i > 0 && i + 1 < n && d.values[i] >= floor_val &&
            d.values[i - 1] > 0.0 && d.values[i + 1] > 0.0) {
            s.valid[i] = 1;
            s.values[i] = (std::log(d.values[i + 1]) - std::log(d.values[i - 1])) /
                          (2.0 * d.dx);
        } else {
            invalid_mass += w * d.values[i] * d.dx;
        }
    }
    if (invalid_mass > 0.5)
        throw score_undefined_error(
            "score: " + std::to_string(invalid_mass) +
            " of the probability mass lies where the density is below the "
            "validity floor");
    return s;
}

double fisher_information(const GridDensity& d) {
    const ScoreFunction s = score(d);
    std::vector<double> integrand(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (s.valid[i]) integrand[i] = d.values[i] * s.values[i] * s.values[i];
    return trapezoid(integrand, d.dx);
}

double entropy_power(const GridDensity& d) {
    return std::exp(2.0 * entropy(d));
}

double rel_entropy_gaussian(const GridDensity& d) {
    return 0.5 * std::log(two_pi_e * variance(d)) - entropy(d);
}

InfoSummary info_summary(const GridDensity& d) {
    InfoSummary s;
    s.entropy = entropy(d);
    s.fisher = fisher_information(d);
    s.entropy_power = std::exp(2.0 * s.entropy);
    s.variance = variance(d);
    s.rel_entropy_gaussian = 0.5 * std::log(two_pi_e * s.variance) - s.entropy;
    return s;
}

GridDensity heat_perturb(const GridDensity& d, double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error("heat_perturb: t must be > 0 and finite");
    require_normalized(d, "heat_perturb");

    const double sigma = std::sqrt(t);

    // Resolve the kernel: at least ~6 samples per sigma.
    const GridDensity* src = &d;
    GridDensity fine;
    double dx = d.dx;
    if (sigma < 6.0 * d.dx) {
        dx = sigma / 6.0;
        const double n_est = d.span() / dx + 1.0;
        if (n_est > static_cast<double>(max_grid_points))
            throw resolution_error(
                "heat_perturb: t too small to resolve on this grid");
        fine = normalize(resample(d, d.x0, dx, static_cast<std::size_t>(n_est)));
        src = &fine;
    }

    const double half = std::max(8.0 * sigma, 8.0 * dx);
    const auto half_n = static_cast<std::size_t>(std::ceil(half / dx));
    GridDensity kernel;
    kernel.dx = dx;
    kernel.x0 = -static_cast<double>(half_n) * dx;
    kernel.values.resize(2 * half_n + 1);
    for (std::size_t k = 0; k < kernel.values.size(); ++k)
        kernel.values[k] = gaussian_pdf(kernel.x(k), 0.0, t);
    kernel = normalize(std::move(kernel));

    return convolve(*src, kernel);
}

HeatPath heat_path(const GridDensity& d, double t) {
    HeatPath p;
    p.base = d;
    p.t = t;
    p.density = (t > 0.0) ? heat_perturb(d, t) : d;
    return p;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1].
constexpr double gl3_x[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double gl3_w[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
constexpr double gl7_x[] = {-0.9491079123427585, -0.7415311855993945,
                            -0.4058451513773972, 0.0,
                            0.4058451513773972,  0.7415311855993945,
                            0.9491079123427585};
constexpr double gl7_w[] = {0.1294849661688697, 0.2797053914892766,
                            0.3818300505051189, 0.4179591836734694,
                            0.3818300505051189, 0.2797053914892766,
                            0.1294849661688697};

struct Panel {
    double u_lo, u_hi;
    double estimate;   // GL7 value
    double err;        // |GL7 - GL3|
};

}  // namespace

double de_bruijn_entropy(const GridDensity& d, double t_max, int n_nodes) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw domain_error("de_bruijn_entropy: t_max must be > 0");
    require_normalized(d, "de_bruijn_entropy");

    const double v = variance(d);

    // Smallest t whose heat kernel is still resolvable within a 2^18-point
    // resample of this grid.
    const double dx_floor = d.span() / static_cast<double>(std::size_t{1} << 18);
    const double t_min =
        std::min(std::max(1e-8, 36.0 * dx_floor * dx_floor), t_max / 128.0);

    std::map<double, double> memo;  // t -> I(X_t)
    int evals = 0;
    auto fisher_at = [&](double t) {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        const double val = fisher_information(heat_perturb(d, t));
        memo.emplace(t, val);
        ++evals;
        return val;
    };
    // Integrand in u = log t:  t * (I(X_t) - 1/(1+t)).
    auto integrand_u = [&](double u) {
        const double t = std::exp(u);
        return t * (fisher_at(t) - 1.0 / (1.0 + t));
    };

    const double u_lo = std::log(t_min), u_hi = std::log(t_max);
    const int budget = std::max(n_nodes, 64);

    auto eval_panel = [&](double a, double b) {
        const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        double g7 = 0.0, g3 = 0.0;
        for (int i = 0; i < 7; ++i) g7 += gl7_w[i] * integrand_u(mid + hw * gl7_x[i]);
        for (int i = 0; i < 3; ++i) g3 += gl3_w[i] * integrand_u(mid + hw * gl3_x[i]);
        g7 *= hw;
        g3 *= hw;
        return Panel{a, b, g7, std::abs(g7 - g3)};
    };

    // Initial log-spaced panels, then bisect the worst while budget remains.
    const int p0 = std::clamp(static_cast<int>(std::ceil((u_hi - u_lo) / 2.8)), 4,
                              std::max(4, (budget - 2) / 10));
    std::vector<Panel> panels;
    for (int i = 0; i < p0; ++i) {
        const double a = u_lo + (u_hi - u_lo) * i / p0;
        const double b = u_lo + (u_hi - u_lo) * (i + 1) / p0;
        panels.push_back(eval_panel(a, b));
    }
    while (evals + 20 <= budget) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        if (panels[worst].err < 1e-9) break;
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.u_lo + p.u_hi);
        panels[worst] = eval_panel(p.u_lo, mid);
        panels.push_back(eval_panel(mid, p.u_hi));
    }
    double integral = 0.0;
    for (const Panel& p : panels) integral += p.estimate;

    // Head [0, t_min]: fit F(t) ~ a/sqrt(t) + b through two small-t samples.
    const double t1 = t_min, t2 = 4.0 * t_min;
    const double f1 = fisher_at(t1) - 1.0 / (1.0 + t1);
    const double f2 = fisher_at(t2) - 1.0 / (1.0 + t2);
    const double a_fit = (f1 - f2) / (1.0 / std::sqrt(t1) - 1.0 / std::sqrt(t2));
    const double b_fit = f1 - a_fit / std::sqrt(t1);
    const double head = 2.0 * a_fit * std::sqrt(t_min) + b_fit * t_min;

    const double tail = 0.5 * std::log((1.0 + t_max) / (v + t_max));
    return 0.5 * std::log(two_pi_e) - 0.5 * (head + integral) - tail;
}

double score_convolution_check(const GridDensity& d1, const GridDensity& d2) {
    require_normalized(d1, "score_convolution_check");
    require_normalized(d2, "score_convolution_check");

    // Put both factors on a common step so one discrete convolution serves
    // for numerator and denominator alike.
    const double dx = std::min(d1.dx, d2.dx);
    auto to_common = [&](const GridDensity& d) {
        if (std::abs(d.dx - dx) / dx <= 1e-12) return d;
        const auto n = static_cast<std::size_t>(std::floor(d.span() / dx)) + 1;
        return normalize(resample(d, d.x0, dx, n));
    };
    const GridDensity a = to_common(d1);
    const GridDensity b = to_common(d2);

    const ScoreFunction s1 = score(a);
    std::vector<double> weighted(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (s1.valid[i]) weighted[i] = a.values[i] * s1.values[i];

    // den(v) = (f1*f2)(v),  num(v) = ((f1 ρ1)*f2)(v),  ρ_proj = num/den.
    // Raw untrimmed convolutions so numerator and denominator share a grid.
    const std::size_t out_len = a.size() + b.size() - 1;
    std::vector<double> den_raw = linear_convolve(a.values, b.values);
    std::vector<double> num_raw = linear_convolve(weighted, b.values);
    for (double& x : den_raw) x *= dx;
    for (double& x : num_raw) x *= dx;

    GridDensity den;
    den.x0 = a.x0 + b.x0;
    den.dx = dx;
    den.values.resize(out_len);
    for (std::size_t i = 0; i < out_len; ++i)
        den.values[i] = std::max(den_raw[i], 0.0);
    const GridDensity sum_density = normalize(den);
    const ScoreFunction direct = score(sum_density);

    const double pk = peak(sum_density);
    double dev = 0.0;
    for (std::size_t i = 0; i < out_len; ++i) {
        if (!direct.valid[i]) continue;
        if (sum_density.values[i] < 1e-6 * pk) continue;
        const double proj = num_raw[i] / den_raw[i];
        dev = std::max(dev, std::abs(direct.values[i] - proj));
    }
    return dev;
}

}  // namespace infosum
