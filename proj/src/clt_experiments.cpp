#include "infosum/clt_experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace infosum {

CltSweepResult iid_info_sequence(const DistributionSpec& spec, int n_max,
                                 double smooth_t, GridConfig config) {
    if (n_max < 2 || n_max > 12)
        throw config_error("iid_info_sequence: n_max must be in 2..12");
    GridDensity base = build_density(spec, config);
    if (smooth_t > 0.0) base = heat_perturb(base, smooth_t);

    CltSweepResult out;
    GridDensity running = base;  // X_1 + ... + X_n, unscaled
    double prev_h = 0.0, prev_i = 0.0;
    bool prev_i_defined = false;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) running = convolve(running, base);
        const GridDensity yn =
            (n == 1) ? running
                     : scale_density(running, 1.0 / std::sqrt(double(n)));

        CltSweepRow row;
        row.n = n;
        row.entropy = entropy(yn);
        row.entropy_power = std::exp(2.0 * row.entropy);
        row.variance = variance(yn);
        row.rel_entropy_gaussian = rel_entropy_gaussian(yn);
        try {
            row.fisher = fisher_information(yn);
        } catch (const score_undefined_error&) {
            row.fisher = std::numeric_limits<double>::infinity();
            row.fisher_defined = false;
        }
        if (n > 1) {
            row.gap_prev = row.entropy - prev_h;
            row.entropy_nondecreasing =
                row.gap_prev >= -CltSweepResult::monotonicity_band;
            if (prev_i_defined && row.fisher_defined)
                row.fisher_nonincreasing =
                    row.fisher <= prev_i + CltSweepResult::monotonicity_band;
        }
        prev_h = row.entropy;
        prev_i = row.fisher;
        prev_i_defined = row.fisher_defined;
        out.rows.push_back(row);
    }
    return out;
}

namespace {

struct Variant {
    const char* key;
    double lhs;
    double rhs;
};

}  // namespace

InequalityReport monotone_on_average(const SumSystem& sys,
                                     const SubsetCollection& c, Tolerance tol) {
    if (!classify(c).balanced)
        throw precondition_violation(
            "monotone_on_average requires a balanced collection");
    const Multiplicities m = multiplicities(c);
    const double vn = sys.subset_variance(sys.full_set());

    // Standardize to unit variance, then measure each functional.
    auto standardized = [&](const std::vector<int>& s) {
        return scale_density(sys.subset_sum(s),
                             1.0 / std::sqrt(sys.subset_variance(s)));
    };

    const GridDensity v_total = standardized(sys.full_set());
    const double h_tot = entropy(v_total);
    const double i_tot = fisher_information(v_total);
    const double n_tot = std::exp(2.0 * h_tot);

    std::vector<double> eta;
    double h_avg = 0.0, inv_i_avg = 0.0, n_avg = 0.0;
    for (const auto& s : c.sets) {
        const double e = sys.subset_variance(s) / (m.r * vn);
        eta.push_back(e);
        const GridDensity vs = standardized(s);
        const double h = entropy(vs);
        h_avg += e * h;
        inv_i_avg += e / fisher_information(vs);
        n_avg += e * std::exp(2.0 * h);
    }

    const Variant variants[] = {{"entropy", h_tot, h_avg},
                                {"inv_fisher", 1.0 / i_tot, inv_i_avg},
                                {"entropy_power", n_tot, n_avg}};

    InequalityReport r;
    r.name = "monotone_on_average";
    r.equation = "linc";
    r.lhs = h_tot;
    r.rhs = h_avg;
    r.gap = h_tot - h_avg;
    r.tolerance = tol.of(r.lhs, r.rhs);
    r.satisfied = true;
    r.metadata["eta"] = eta;
    r.metadata["r"] = m.r;
    r.metadata["sets"] = c.sets;
    for (const Variant& v : variants) {
        const double gap = v.lhs - v.rhs;
        const double t = tol.of(v.lhs, v.rhs);
        if (gap < -t) r.satisfied = false;
        r.metadata[v.key] = {{"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", gap},
                             {"tolerance", t}};
    }
    return r;
}

double halton_point(std::uint64_t index, std::uint64_t base) {
    double result = 0.0, f = 1.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        result += f * static_cast<double>(index % base);
        index /= base;
    }
    return result;
}

namespace {

constexpr std::uint64_t primes[] = {2,  3,  5,  7,  11, 13, 17,
                                    19, 23, 29, 31, 37};

// Piecewise-linear inverse CDF lookup table for a grid density.
struct InverseCdf {
    std::vector<double> cdf;  // cdf[k] at node k, cdf.front()=0, back()=1
    double x0, dx;

    explicit InverseCdf(const GridDensity& d) : x0(d.x0), dx(d.dx) {
        cdf.resize(d.size());
        cdf[0] = 0.0;
        for (std::size_t k = 1; k < d.size(); ++k)
            cdf[k] = cdf[k - 1] + 0.5 * (d.values[k - 1] + d.values[k]) * d.dx;
        const double total = cdf.back();
        for (double& v : cdf) v /= total;
    }

    double operator()(double u) const {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.begin()) return x0;
        if (it == cdf.end()) return x0 + dx * static_cast<double>(cdf.size() - 1);
        const auto k = static_cast<std::size_t>(it - cdf.begin()) - 1;
        const double seg = cdf[k + 1] - cdf[k];
        const double frac = seg > 0.0 ? (u - cdf[k]) / seg : 0.0;
        return x0 + dx * (static_cast<double>(k) + frac);
    }
};

}  // namespace

ProjectionGapResult projection_gap_detail(const SumSystem& sys,
                                          const SubsetCollection& c,
                                          const WeightVector& w, int points,
                                          std::uint64_t seed) {
    if (w.w.size() != c.sets.size())
        throw config_error("projection_gap: weights not parallel to sets");
    if (points < 16) throw config_error("projection_gap: need >= 16 points");
    const int n = sys.n();
    if (static_cast<std::size_t>(n) > std::size(primes))
        throw config_error("projection_gap: too many summands");

    // Scores of every subset sum and of the total, on their own grids.
    std::vector<ScoreFunction> scores;
    scores.reserve(c.sets.size());
    for (const auto& s : c.sets) scores.push_back(score(sys.subset_sum(s)));
    const ScoreFunction total_score = score(sys.total());

    std::vector<InverseCdf> inv;
    inv.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) inv.emplace_back(sys.base(i));

    // Cranley-Patterson rotation of a Halton sequence, seeded.
    std::mt19937_64 gen(seed);
    std::vector<double> shift(static_cast<std::size_t>(n));
    for (double& s : shift)
        s = static_cast<double>(gen() >> 11) * 0x1.0p-53;

    double gap_acc = 0.0, combo_acc = 0.0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int j = 0; j < points; ++j) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = halton_point(static_cast<std::uint64_t>(j) + 1,
                                    primes[static_cast<std::size_t>(i)]) +
                       shift[static_cast<std::size_t>(i)];
            u -= std::floor(u);
            // Clamp off the exact endpoints where the CDF inverse degenerates.
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            x[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i)](u);
            total += x[static_cast<std::size_t>(i)];
        }
        double combo = 0.0;
        for (std::size_t k = 0; k < c.sets.size(); ++k) {
            if (w.w[k] == 0.0) continue;
            double t = 0.0;
            for (int i : c.sets[k]) t += x[static_cast<std::size_t>(i - 1)];
            combo += w.w[k] * scores[k].at(t);
        }
        const double diff = combo - total_score.at(total);
        gap_acc += diff * diff;
        combo_acc += combo * combo;
    }

    ProjectionGapResult r;
    r.gap = gap_acc / points;
    r.combo_second_moment = combo_acc / points;
    r.seed = seed;
    r.points = points;
    return r;
}

double projection_gap(const SumSystem& sys, const SubsetCollection& c,
                      const WeightVector& w, int points, std::uint64_t seed) {
    return projection_gap_detail(sys, c, w, points, seed).gap;
}

}  // namespace infosum
