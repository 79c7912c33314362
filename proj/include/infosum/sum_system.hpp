#pragma once

#include <map>
#include <vector>

#include "infosum/distributions.hpp"
#include "infosum/grid_density.hpp"
#include "infosum/info_functionals.hpp"

namespace infosum {

// A system of independent scalar variables X_1..X_n plus a cache of their
// subset-sum densities and the information functionals of those sums.
// Subsets are 1-based sorted index lists.
class SumSystem {
public:
    explicit SumSystem(std::vector<DistributionSpec> specs,
                       GridConfig config = {});

    int n() const { return static_cast<int>(specs_.size()); }
    const GridConfig& config() const { return config_; }
    const std::vector<DistributionSpec>& specs() const { return specs_; }

    const GridDensity& base(int i) const;  // 1-based

    // Density of the sum over s; built by folding convolutions, cached, and
    // reused for prefixes. Throws domain_error for empty s, config_error for
    // indices outside 1..n.
    const GridDensity& subset_sum(const std::vector<int>& s) const;
    const GridDensity& total() const;
    std::vector<int> full_set() const;

    double subset_entropy(const std::vector<int>& s) const;
    double subset_fisher(const std::vector<int>& s) const;
    double subset_entropy_power(const std::vector<int>& s) const;
    double subset_rel_entropy(const std::vector<int>& s) const;

    // Analytic variance sum over members (from the specs, not the grids).
    double subset_variance(const std::vector<int>& s) const;

private:
    std::vector<int> canonical(const std::vector<int>& s) const;

    std::vector<DistributionSpec> specs_;
    GridConfig config_;
    std::vector<GridDensity> bases_;
    std::vector<double> base_variances_;
    mutable std::map<std::vector<int>, GridDensity> density_cache_;
    mutable std::map<std::vector<int>, double> entropy_cache_;
    mutable std::map<std::vector<int>, double> fisher_cache_;
};

}  // namespace infosum
