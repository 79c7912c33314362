#pragma once

#include <vector>

#include "infosum/subset_collections.hpp"

namespace infosum {

// One finite coordinate: support values and their probabilities.
struct Coordinate {
    std::vector<double> values;
    std::vector<double> probs;
};

// Product of up to 5 independent finite coordinates, each of size <= 8.
// Flat table indexing is row-major with the LAST coordinate fastest:
// index = sum_j idx_j * stride_j, stride_{n-1} = 1.
struct ProductSpace {
    std::vector<Coordinate> coords;

    static ProductSpace make(std::vector<Coordinate> coords);
    static ProductSpace iid(int n, Coordinate c);

    int n() const { return static_cast<int>(coords.size()); }
    std::size_t size(int j) const { return coords[static_cast<std::size_t>(j)].values.size(); }
    std::size_t total() const;
    std::size_t stride(int j) const;
    double point_prob(std::size_t flat) const;
};

// Real-valued function tabulated on the full product grid.
struct TableFunction {
    std::vector<double> values;
};

double table_mean(const TableFunction& f, const ProductSpace& space);
double table_inner(const TableFunction& f, const TableFunction& g,
                   const ProductSpace& space);  // E[f g]
double table_variance(const TableFunction& f, const ProductSpace& space);

// Conditional expectation over coordinate j (1-based): output is constant
// along j. Exact.
TableFunction project_out(const TableFunction& f, int j,
                          const ProductSpace& space);

// All 2^n orthogonal components: components[mask] is the part of f that
// depends on exactly the coordinates in mask (bit j-1 set <=> j involved).
struct AnovaDecomposition {
    std::vector<TableFunction> components;

    const TableFunction& component(const std::vector<int>& t) const;
};

AnovaDecomposition anova_decompose(const TableFunction& f,
                                   const ProductSpace& space);

// U = sum over s in C of psi_s, each psi_s depending only on the coordinates
// in s and mean zero (validated within 1e-12).
struct CAdditiveFunction {
    SubsetCollection collection;
    std::vector<TableFunction> components;  // parallel to collection.sets,
                                            // each on the full grid

    // Components given as tables over just the coordinates of each set
    // (row-major in increasing coordinate order); lifts them to the full
    // grid and validates.
    static CAdditiveFunction from_subtables(
        const ProductSpace& space, SubsetCollection collection,
        const std::vector<std::vector<double>>& subtables);

    TableFunction sum() const;
};

struct VarianceDropResult {
    double lhs;  // E U^2, exact
    double rhs;  // r * sum_s E psi_s^2, or sum_s E psi_s^2 / beta_s
};

// Uniform-r mode. Throws error if the certified bound fails by > 1e-12.
VarianceDropResult variance_drop_bound(const CAdditiveFunction& u,
                                       const ProductSpace& space);
// Packing mode; beta entries of 0 paired with nonzero components give an
// infinite right side. Throws precondition_violation on invalid packing.
VarianceDropResult variance_drop_bound(const CAdditiveFunction& u,
                                       const ProductSpace& space,
                                       const FractionalPacking& beta);

// U-statistic bound for symmetric mean-zero psi on the first m coordinates
// of an i.i.d. space: lhs = E U^2, rhs = (m/n) E psi^2. Throws
// precondition_violation if psi is not symmetric/mean-zero or the space is
// not i.i.d.
VarianceDropResult hoeffding_u_variance(const std::vector<double>& psi, int m,
                                        const ProductSpace& space);

}  // namespace infosum
