#pragma once

#include <json.hpp>
#include <string>

#include "infosum/subset_collections.hpp"
#include "infosum/sum_system.hpp"

namespace infosum {

// One verified inequality. `gap` is signed so that nonnegative always means
// the inequality held, whatever its printed orientation; satisfied is
// gap >= -tolerance. `equation` is the upstream label carried through to
// reports verbatim.
struct InequalityReport {
    std::string name;
    std::string equation;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool satisfied = false;
    double tolerance = 0.0;
    nlohmann::json metadata;
};

// tolerance = abs + rel * max(|lhs|, |rhs|).
struct Tolerance {
    double abs = 1e-6;
    double rel = 1e-3;

    double of(double lhs, double rhs) const;
};

// N(T_n) vs (1/r) * sum_s N(T^(s)).
InequalityReport verify_subset_epi(const SumSystem& sys,
                                   const SubsetCollection& c,
                                   Tolerance tol = {});

// 1/I(T_n) vs (1/r) * sum_s 1/I(T^(s)). Undefined subset scores surface as
// not_evaluable_error naming the subset.
InequalityReport verify_fii(const SumSystem& sys, const SubsetCollection& c,
                            Tolerance tol = {});

// r * sum_s w_s^2 I(T^(s)) vs I(T_n), gap = lhs - rhs.
InequalityReport verify_weighted_fii(const SumSystem& sys,
                                     const SubsetCollection& c,
                                     const WeightVector& w, Tolerance tol = {});

// H(T_n) vs sum_s w_s H(T^(s)) + H(w)/2 - log(r)/2. Also evaluates the
// equivalent scaled form sum_s w_s H(T^(s)/sqrt(w_s r)) and insists the two
// right sides agree within 1e-9.
InequalityReport verify_entropy_of_sums(const SumSystem& sys,
                                        const SubsetCollection& c,
                                        const WeightVector& w,
                                        Tolerance tol = {});

// D(T_n) vs sum_s w_s D(T^(s)) + D(w||eta)/2 with eta_s proportional to the
// subset variances; requires balanced C (else precondition_violation).
// gap = rhs - lhs.
InequalityReport verify_relent(const SumSystem& sys, const SubsetCollection& c,
                               const WeightVector& w, Tolerance tol = {});

// 1/I(T_n) vs sum_s beta_s / I(T^(s)) for a fractional packing beta.
InequalityReport verify_refined_fii(const SumSystem& sys,
                                    const SubsetCollection& c,
                                    const FractionalPacking& beta,
                                    Tolerance tol = {});

// N(T_n) vs sum_s N(T^(s))/r(s); requires that within each multiplicity
// class no single set carries more entropy power than the class average
// allows (else not_evaluable_error naming the set).
InequalityReport verify_rs_epi(const SumSystem& sys, const SubsetCollection& c,
                               Tolerance tol = {});

// Weights w_s proportional to 1/I(T^(s)) (minimizers of the weighted Fisher
// bound) and to N(T^(s)) (used by the entropy equality cases).
WeightVector inverse_fisher_weights(const SumSystem& sys,
                                    const SubsetCollection& c);
WeightVector entropy_power_weights(const SumSystem& sys,
                                   const SubsetCollection& c);

// eta_s = Var(T^(s)) / (r * Var(T_n)) from the summand variances; a probability
// vector exactly when C is balanced.
std::vector<double> variance_weights(const SumSystem& sys,
                                     const SubsetCollection& c);

}  // namespace infosum
