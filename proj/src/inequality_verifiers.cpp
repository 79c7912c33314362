#include "infosum/inequality_verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace infosum {

namespace {

using nlohmann::json;

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

InequalityReport make_report(std::string name, std::string equation, double lhs,
                             double rhs, double gap, Tolerance tol,
                             json metadata) {
    InequalityReport r;
    r.name = std::move(name);
    r.equation = std::move(equation);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = gap;
    r.tolerance = tol.of(lhs, rhs);
    r.satisfied = gap >= -r.tolerance;
    r.metadata = std::move(metadata);
    return r;
}

double subset_inv_fisher(const SumSystem& sys, const std::vector<int>& s) {
    try {
        return 1.0 / sys.subset_fisher(s);
    } catch (const score_undefined_error& e) {
        throw not_evaluable_error(
            "score undefined for subset sum " + subset_str(s) + ": " + e.what(),
            s);
    }
}

}  // namespace

double Tolerance::of(double lhs, double rhs) const {
    return abs + rel * std::max(std::abs(lhs), std::abs(rhs));
}

InequalityReport verify_subset_epi(const SumSystem& sys,
                                   const SubsetCollection& c, Tolerance tol) {
    const Multiplicities m = multiplicities(c);
    const double lhs = sys.subset_entropy_power(sys.full_set());
    double rhs = 0.0;
    for (const auto& s : c.sets) rhs += sys.subset_entropy_power(s);
    rhs /= m.r;
    return make_report("subset_epi", "epi-std", lhs, rhs, lhs - rhs, tol,
                       json{{"r", m.r}, {"sets", c.sets}});
}

InequalityReport verify_fii(const SumSystem& sys, const SubsetCollection& c,
                            Tolerance tol) {
    const Multiplicities m = multiplicities(c);
    const double lhs = subset_inv_fisher(sys, sys.full_set());
    double rhs = 0.0;
    for (const auto& s : c.sets) rhs += subset_inv_fisher(sys, s);
    rhs /= m.r;
    return make_report("fii", "fii", lhs, rhs, lhs - rhs, tol,
                       json{{"r", m.r}, {"sets", c.sets}});
}

InequalityReport verify_weighted_fii(const SumSystem& sys,
                                     const SubsetCollection& c,
                                     const WeightVector& w, Tolerance tol) {
    if (w.w.size() != c.sets.size())
        throw config_error("weighted_fii: weights not parallel to sets");
    const Multiplicities m = multiplicities(c);
    double lhs = 0.0;
    for (std::size_t k = 0; k < c.sets.size(); ++k) {
        if (w.w[k] == 0.0) continue;
        try {
            lhs += w.w[k] * w.w[k] * sys.subset_fisher(c.sets[k]);
        } catch (const score_undefined_error& e) {
            throw not_evaluable_error("score undefined for subset sum " +
                                          subset_str(c.sets[k]) + ": " + e.what(),
                                      c.sets[k]);
        }
    }
    lhs *= m.r;
    double rhs;
    try {
        rhs = sys.subset_fisher(sys.full_set());
    } catch (const score_undefined_error& e) {
        throw not_evaluable_error(std::string("score undefined for total sum: ") +
                                      e.what(),
                                  sys.full_set());
    }
    return make_report("weighted_fii", "central-I", lhs, rhs, lhs - rhs, tol,
                       json{{"r", m.r}, {"weights", w.w}, {"sets", c.sets}});
}

InequalityReport verify_entropy_of_sums(const SumSystem& sys,
                                        const SubsetCollection& c,
                                        const WeightVector& w, Tolerance tol) {
    if (w.w.size() != c.sets.size())
        throw config_error("entropy_of_sums: weights not parallel to sets");
    const Multiplicities m = multiplicities(c);
    const double lhs = sys.subset_entropy(sys.full_set());

    double rhs = 0.0, rhs_scaled = 0.0;
    for (std::size_t k = 0; k < c.sets.size(); ++k) {
        const double ws = w.w[k];
        if (ws == 0.0) continue;
        rhs += ws * sys.subset_entropy(c.sets[k]);
        const GridDensity scaled =
            scale_density(sys.subset_sum(c.sets[k]), 1.0 / std::sqrt(ws * m.r));
        rhs_scaled += ws * entropy(scaled);
    }
    rhs += 0.5 * w.entropy() - 0.5 * std::log(static_cast<double>(m.r));

    if (std::abs(rhs - rhs_scaled) > 1e-9)
        throw error("entropy_of_sums: scaled form disagrees with direct form by " +
                    std::to_string(rhs - rhs_scaled));

    return make_report("entropy_of_sums", "H-sums", lhs, rhs, lhs - rhs, tol,
                       json{{"r", m.r},
                            {"weights", w.w},
                            {"weight_entropy", w.entropy()},
                            {"rhs_scaled_form", rhs_scaled},
                            {"sets", c.sets}});
}

std::vector<double> variance_weights(const SumSystem& sys,
                                     const SubsetCollection& c) {
    const Multiplicities m = multiplicities(c);
    const double vn = sys.subset_variance(sys.full_set());
    std::vector<double> eta;
    eta.reserve(c.sets.size());
    for (const auto& s : c.sets)
        eta.push_back(sys.subset_variance(s) / (m.r * vn));
    return eta;
}

InequalityReport verify_relent(const SumSystem& sys, const SubsetCollection& c,
                               const WeightVector& w, Tolerance tol) {
    if (w.w.size() != c.sets.size())
        throw config_error("relent: weights not parallel to sets");
    if (!classify(c).balanced)
        throw precondition_violation(
            "relent requires a balanced collection (the variance weights only "
            "form a probability vector when every index has equal multiplicity)");
    const Multiplicities m = multiplicities(c);
    const std::vector<double> eta = variance_weights(sys, c);

    const double lhs = sys.subset_rel_entropy(sys.full_set());
    double rhs = 0.0;
    for (std::size_t k = 0; k < c.sets.size(); ++k)
        if (w.w[k] > 0.0) rhs += w.w[k] * sys.subset_rel_entropy(c.sets[k]);
    rhs += 0.5 * discrete_kl(w, eta);

    return make_report("relent", "relent", lhs, rhs, rhs - lhs, tol,
                       json{{"r", m.r},
                            {"weights", w.w},
                            {"eta", eta},
                            {"sets", c.sets}});
}

InequalityReport verify_refined_fii(const SumSystem& sys,
                                    const SubsetCollection& c,
                                    const FractionalPacking& beta,
                                    Tolerance tol) {
    if (!validate_packing(c, beta))
        throw precondition_violation(
            "refined_fii: beta is not a fractional packing for this collection");
    const double lhs = subset_inv_fisher(sys, sys.full_set());
    double rhs = 0.0;
    for (std::size_t k = 0; k < c.sets.size(); ++k) {
        if (beta.beta[k] == 0.0) continue;
        rhs += beta.beta[k] * subset_inv_fisher(sys, c.sets[k]);
    }
    return make_report("refined_fii", "our-epi-ref", lhs, rhs, lhs - rhs, tol,
                       json{{"beta", beta.beta}, {"sets", c.sets}});
}

InequalityReport verify_rs_epi(const SumSystem& sys, const SubsetCollection& c,
                               Tolerance tol) {
    const Multiplicities m = multiplicities(c);

    // Group sets by multiplicity class and test the no-dominance hypothesis.
    std::map<int, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < c.sets.size(); ++k)
        classes[m.r_set[k]].push_back(k);
    for (const auto& [rho, members] : classes) {
        double z = 0.0;
        for (std::size_t k : members) z += sys.subset_entropy_power(c.sets[k]);
        for (std::size_t k : members) {
            const double nk = sys.subset_entropy_power(c.sets[k]);
            if (nk > z / rho * (1.0 + 1e-9))
                throw not_evaluable_error(
                    "rs_epi: set " + subset_str(c.sets[k]) +
                        " dominates its multiplicity class (entropy power " +
                        std::to_string(nk) + " > class sum " + std::to_string(z) +
                        " / " + std::to_string(rho) + ")",
                    c.sets[k]);
        }
    }

    const double lhs = sys.subset_entropy_power(sys.full_set());
    double rhs = 0.0;
    for (std::size_t k = 0; k < c.sets.size(); ++k)
        rhs += sys.subset_entropy_power(c.sets[k]) / m.r_set[k];
    return make_report("rs_epi", "epi-rs", lhs, rhs, lhs - rhs, tol,
                       json{{"r_set", m.r_set}, {"sets", c.sets}});
}

WeightVector inverse_fisher_weights(const SumSystem& sys,
                                    const SubsetCollection& c) {
    std::vector<double> w;
    w.reserve(c.sets.size());
    double total = 0.0;
    for (const auto& s : c.sets) {
        const double v = subset_inv_fisher(sys, s);
        w.push_back(v);
        total += v;
    }
    for (double& v : w) v /= total;
    return WeightVector::make(std::move(w));
}

WeightVector entropy_power_weights(const SumSystem& sys,
                                   const SubsetCollection& c) {
    std::vector<double> w;
    w.reserve(c.sets.size());
    double total = 0.0;
    for (const auto& s : c.sets) {
        const double v = sys.subset_entropy_power(s);
        w.push_back(v);
        total += v;
    }
    for (double& v : w) v /= total;
    return WeightVector::make(std::move(w));
}

}  // namespace infosum
