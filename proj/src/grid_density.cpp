#include "infosum/grid_density.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <string>

namespace infosum {

void GridDensity::validate() const {
    if (!(dx > 0.0) || !std::isfinite(dx))
        throw invalid_density_error("grid step must be positive and finite");
    if (values.size() < min_points)
        throw invalid_density_error("grid needs at least " +
                                    std::to_string(min_points) + " points, got " +
                                    std::to_string(values.size()));
    if (!std::isfinite(x0))
        throw invalid_density_error("grid origin must be finite");
    for (double v : values)
        if (!std::isfinite(v) || v < 0.0)
            throw invalid_density_error("density values must be finite and >= 0");
}

bool GridDensity::is_normalized() const {
    return std::abs(mass(*this) - 1.0) <= tol_mass;
}

double trapezoid(const std::vector<double>& values, double dx) {
    if (values.size() < 2) return 0.0;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
    return s * dx;
}

double mass(const GridDensity& d) { return trapezoid(d.values, d.dx); }

Moments moments(const GridDensity& d) {
    const std::size_t n = d.size();
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        const double fw = w * d.values[i];
        m0 += fw;
        m1 += fw * d.x(i);
    }
    m0 *= d.dx;
    m1 *= d.dx;
    const double mu = m1 / m0;
    // Second pass around the mean keeps the variance numerically clean when
    // the grid sits far from the origin.
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        const double c = d.x(i) - mu;
        m2 += w * d.values[i] * c * c;
    }
    m2 *= d.dx;
    return {m0, mu, m2 / m0};
}

double mean(const GridDensity& d) { return moments(d).mean; }
double variance(const GridDensity& d) { return moments(d).variance; }

double peak(const GridDensity& d) {
    return *std::max_element(d.values.begin(), d.values.end());
}

GridDensity normalize(GridDensity d) {
    const double m = mass(d);
    if (!std::isfinite(m) || m <= 0.0)
        throw invalid_density_error("cannot normalize: total mass is " +
                                    std::to_string(m));
    for (double& v : d.values) v /= m;
    return d;
}

GridDensity scale_density(const GridDensity& d, double a) {
    if (a == 0.0 || !std::isfinite(a))
        throw domain_error("scale_density: factor must be nonzero and finite");
    GridDensity out;
    out.dx = std::abs(a) * d.dx;
    out.values.resize(d.size());
    const double inv = 1.0 / std::abs(a);
    if (a > 0.0) {
        out.x0 = a * d.x0;
        for (std::size_t i = 0; i < d.size(); ++i) out.values[i] = d.values[i] * inv;
    } else {
        out.x0 = a * d.x_last();
        for (std::size_t i = 0; i < d.size(); ++i)
            out.values[i] = d.values[d.size() - 1 - i] * inv;
    }
    return out;
}

GridDensity resample(const GridDensity& d, double x0, double dx, std::size_t n) {
    if (n > max_grid_points)
        throw resolution_error("resample target of " + std::to_string(n) +
                               " points exceeds the grid cap");
    GridDensity out;
    out.x0 = x0;
    out.dx = dx;
    out.values.assign(n, 0.0);
    const std::size_t m = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (x0 + static_cast<double>(i) * dx - d.x0) / d.dx;
        if (t < 0.0 || t > static_cast<double>(m - 1)) continue;
        const auto k = static_cast<std::size_t>(t);
        if (k + 1 >= m) {
            out.values[i] = d.values[m - 1];
        } else {
            const double frac = t - static_cast<double>(k);
            out.values[i] = d.values[k] * (1.0 - frac) + d.values[k + 1] * frac;
        }
    }
    return out;
}

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

// Linear convolution of two real sequences via FFTW r2c/c2r.
// Deterministic: FFTW_ESTIMATE plans don't depend on runtime measurements.
std::vector<double> linear_convolve(const std::vector<double>& a,
                                    const std::vector<double>& b) {
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t L = next_pow2(out_len);
    const std::size_t Lc = L / 2 + 1;

    std::vector<double> pa(L, 0.0), pb(L, 0.0);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());

    std::vector<std::complex<double>> fa(Lc), fb(Lc);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan pf_a = fftw_plan_dft_r2c_1d(static_cast<int>(L), pa.data(),
                                          reinterpret_cast<fftw_complex*>(fa.data()), flags);
    fftw_execute(pf_a);
    fftw_destroy_plan(pf_a);
    fftw_plan pf_b = fftw_plan_dft_r2c_1d(static_cast<int>(L), pb.data(),
                                          reinterpret_cast<fftw_complex*>(fb.data()), flags);
    fftw_execute(pf_b);
    fftw_destroy_plan(pf_b);

    for (std::size_t i = 0; i < Lc; ++i) fa[i] *= fb[i];

    std::vector<double> out(L, 0.0);
    fftw_plan pi = fftw_plan_dft_c2r_1d(static_cast<int>(L),
                                        reinterpret_cast<fftw_complex*>(fa.data()),
                                        out.data(), flags);
    fftw_execute(pi);
    fftw_destroy_plan(pi);

    out.resize(out_len);
    const double inv = 1.0 / static_cast<double>(L);
    for (double& v : out) v *= inv;
    return out;
}

GridDensity convolve(const GridDensity& a, const GridDensity& b) {
    a.validate();
    b.validate();
    if (!a.is_normalized() || !b.is_normalized())
        throw invalid_density_error("convolve expects normalized inputs");

    const double span_a = a.span(), span_b = b.span();
    const double ratio = std::max(span_a, span_b) / std::min(span_a, span_b);
    if (ratio > 1e6)
        throw resolution_error("convolve: grid spans differ by a factor " +
                               std::to_string(ratio) + " (> 1e6)");

    // Reconcile steps: resample the coarser operand to the finer dx.
    const GridDensity* pa = &a;
    const GridDensity* pb = &b;
    GridDensity ra, rb;
    const double rel = std::abs(a.dx - b.dx) / std::max(a.dx, b.dx);
    if (rel > 1e-12) {
        if (a.dx > b.dx) {
            const auto n = static_cast<std::size_t>(std::floor(span_a / b.dx)) + 1;
            if (n > max_grid_points)
                throw resolution_error("convolve: reconciled grid too large");
            ra = normalize(resample(a, a.x0, b.dx, n));
            pa = &ra;
        } else {
            const auto n = static_cast<std::size_t>(std::floor(span_b / a.dx)) + 1;
            if (n > max_grid_points)
                throw resolution_error("convolve: reconciled grid too large");
            rb = normalize(resample(b, b.x0, a.dx, n));
            pb = &rb;
        }
    }

    const double dx = std::min(a.dx, b.dx);
    if (pa->size() + pb->size() - 1 > max_grid_points)
        throw resolution_error("convolve: output grid exceeds the grid cap");

    std::vector<double> conv = linear_convolve(pa->values, pb->values);
    // (f*g)(x_k) = sum_i f_i g_{k-i} dx, up to FFT roundoff.
    double pk = 0.0;
    for (double& v : conv) {
        v = std::max(v * dx, 0.0);
        pk = std::max(pk, v);
    }

    // Trim tails that fell below 1e-14 * peak; keep the grid non-degenerate.
    const double floor_val = 1e-14 * pk;
    std::size_t lo = 0, hi = conv.size();
    while (lo + GridDensity::min_points < hi && conv[lo] < floor_val) ++lo;
    while (hi - lo > GridDensity::min_points && conv[hi - 1] < floor_val) --hi;

    GridDensity out;
    out.dx = dx;
    out.x0 = pa->x0 + pb->x0 + static_cast<double>(lo) * dx;
    out.values.assign(conv.begin() + static_cast<std::ptrdiff_t>(lo),
                      conv.begin() + static_cast<std::ptrdiff_t>(hi));
    return normalize(std::move(out));
}

}  // namespace infosum
