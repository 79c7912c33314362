#include "infosum/sum_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace infosum {

SumSystem::SumSystem(std::vector<DistributionSpec> specs, GridConfig config)
    : specs_(std::move(specs)), config_(config) {
    if (specs_.empty()) throw config_error("sum system: needs at least one variable");
    config_.validate();
    bases_.reserve(specs_.size());
    base_variances_.reserve(specs_.size());
    for (const auto& sp : specs_) {
        bases_.push_back(build_density(sp, config_));
        base_variances_.push_back(spec_variance(sp));
    }
}

const GridDensity& SumSystem::base(int i) const {
    if (i < 1 || i > n())
        throw config_error("sum system: index " + std::to_string(i) +
                           " outside 1.." + std::to_string(n()));
    return bases_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> SumSystem::canonical(const std::vector<int>& s) const {
    if (s.empty()) throw domain_error("subset_sum: empty subset");
    std::vector<int> out = s;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.front() < 1 || out.back() > n())
        throw config_error("subset_sum: index outside 1.." + std::to_string(n()));
    return out;
}

const GridDensity& SumSystem::subset_sum(const std::vector<int>& s) const {
    const std::vector<int> key = canonical(s);
    auto it = density_cache_.find(key);
    if (it != density_cache_.end()) return it->second;

    GridDensity d;
    if (key.size() == 1) {
        d = base(key[0]);
    } else {
        std::vector<int> prefix(key.begin(), key.end() - 1);
        d = convolve(subset_sum(prefix), base(key.back()));
    }
    return density_cache_.emplace(key, std::move(d)).first->second;
}

const GridDensity& SumSystem::total() const { return subset_sum(full_set()); }

std::vector<int> SumSystem::full_set() const {
    std::vector<int> s(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) s[static_cast<std::size_t>(i)] = i + 1;
    return s;
}

double SumSystem::subset_entropy(const std::vector<int>& s) const {
    const std::vector<int> key = canonical(s);
    auto it = entropy_cache_.find(key);
    if (it != entropy_cache_.end()) return it->second;
    const double h = entropy(subset_sum(key));
    return entropy_cache_.emplace(key, h).first->second;
}

double SumSystem::subset_fisher(const std::vector<int>& s) const {
    const std::vector<int> key = canonical(s);
    auto it = fisher_cache_.find(key);
    if (it != fisher_cache_.end()) return it->second;
    const double f = fisher_information(subset_sum(key));
    return fisher_cache_.emplace(key, f).first->second;
}

double SumSystem::subset_entropy_power(const std::vector<int>& s) const {
    return std::exp(2.0 * subset_entropy(s));
}

double SumSystem::subset_rel_entropy(const std::vector<int>& s) const {
    const GridDensity& d = subset_sum(s);
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance(d)) -
           subset_entropy(s);
}

double SumSystem::subset_variance(const std::vector<int>& s) const {
    double v = 0.0;
    for (int i : canonical(s)) v += base_variances_[static_cast<std::size_t>(i - 1)];
    return v;
}

}  // namespace infosum
