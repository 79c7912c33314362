#pragma once

#include <string>
#include <vector>

#include "infosum/errors.hpp"

namespace infosum {

// A collection C of nonempty subsets of {1..n}. Duplicates are permitted and
// counted with multiplicity. Canonical form: each set sorted ascending, the
// list of sets sorted lexicographically.
struct SubsetCollection {
    int n = 0;
    std::vector<std::vector<int>> sets;

    // Canonicalizes and validates. Throws config_error on empty sets or
    // indices outside 1..n.
    static SubsetCollection make(int n, std::vector<std::vector<int>> sets);

    std::size_t size() const { return sets.size(); }
};

struct Multiplicities {
    int r = 0;                 // max_i r(i)
    std::vector<int> r_index;  // r_index[i-1] = #sets containing i
    std::vector<int> r_set;    // r_set[k] = max_{i in sets[k]} r(i)
};

Multiplicities multiplicities(const SubsetCollection& c);

struct Classification {
    bool balanced = false;        // all r(i) equal
    bool discriminating = false;  // every ordered pair (i,j) separated by some set
    bool quasibalanced = false;   // r(i) == r(s) for every s and i in s
};

Classification classify(const SubsetCollection& c);

// kind: "singletons" | "leave_one_out" | "all_m_subsets" (param = m) |
// "sliding_window" (param = k). Throws config_error for out-of-range params.
SubsetCollection standard_collection(const std::string& kind, int n,
                                     int param = 0);

// Inserts each deficient index into sets that lack it until every index sits
// in exactly r sets. Keeps r and |C| unchanged; result is balanced and each
// original set is contained in its augmented counterpart.
SubsetCollection augment_to_balanced(const SubsetCollection& c);

// beta: one coefficient per set (parallel to c.sets).
struct FractionalPacking {
    std::vector<double> beta;
};

// True iff beta >= 0 and, for every index i, sum of beta over sets containing
// i is <= 1 + 1e-12. Throws config_error on size mismatch.
bool validate_packing(const SubsetCollection& c, const FractionalPacking& p);

FractionalPacking uniform_packing(const SubsetCollection& c);   // beta = 1/r
FractionalPacking natural_packing(const SubsetCollection& c);   // beta = 1/r(s)

// Maximize sum_s c_s beta_s over valid packings; returns an optimal vertex.
// Objective weights must be >= 0 and parallel to c.sets (empty = all ones).
FractionalPacking optimize_packing_lp(const SubsetCollection& c,
                                      std::vector<double> objective = {});

// Probability weights over the sets of a collection.
struct WeightVector {
    std::vector<double> w;

    // Validates nonnegativity and sum == 1 within 1e-12.
    static WeightVector make(std::vector<double> w);
    static WeightVector uniform(std::size_t count);

    double entropy() const;  // sum of w_s log(1/w_s)
};

// Discrete relative entropy sum_s w_s log(w_s / q_s); q must be positive
// wherever w is.
double discrete_kl(const WeightVector& w, const std::vector<double>& q);

}  // namespace infosum
