#include "infosum/subset_collections.hpp"

#include <algorithm>
#include <cmath>

#include "infosum/simplex_lp.hpp"

namespace infosum {

SubsetCollection SubsetCollection::make(int n, std::vector<std::vector<int>> sets) {
    if (n < 1) throw config_error("collection: n must be >= 1");
    if (sets.empty()) throw config_error("collection: needs at least one set");
    for (auto& s : sets) {
        if (s.empty()) throw config_error("collection: empty set not allowed");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.front() < 1 || s.back() > n)
            throw config_error("collection: set element outside 1.." +
                               std::to_string(n));
    }
    std::sort(sets.begin(), sets.end());
    SubsetCollection c;
    c.n = n;
    c.sets = std::move(sets);
    return c;
}

Multiplicities multiplicities(const SubsetCollection& c) {
    Multiplicities m;
    m.r_index.assign(static_cast<std::size_t>(c.n), 0);
    for (const auto& s : c.sets)
        for (int i : s) ++m.r_index[static_cast<std::size_t>(i - 1)];
    m.r = *std::max_element(m.r_index.begin(), m.r_index.end());
    m.r_set.reserve(c.sets.size());
    for (const auto& s : c.sets) {
        int rs = 0;
        for (int i : s) rs = std::max(rs, m.r_index[static_cast<std::size_t>(i - 1)]);
        m.r_set.push_back(rs);
    }
    return m;
}

Classification classify(const SubsetCollection& c) {
    const Multiplicities m = multiplicities(c);
    Classification out;

    out.balanced = std::all_of(m.r_index.begin(), m.r_index.end(),
                               [&](int ri) { return ri == m.r_index[0]; });

    out.discriminating = true;
    for (int i = 1; i <= c.n && out.discriminating; ++i)
        for (int j = 1; j <= c.n && out.discriminating; ++j) {
            if (i == j) continue;
            bool separated = false;
            for (const auto& s : c.sets) {
                const bool has_i = std::binary_search(s.begin(), s.end(), i);
                const bool has_j = std::binary_search(s.begin(), s.end(), j);
                if (has_i && !has_j) {
                    separated = true;
                    break;
                }
            }
            if (!separated) out.discriminating = false;
        }

    out.quasibalanced = true;
    for (std::size_t k = 0; k < c.sets.size() && out.quasibalanced; ++k)
        for (int i : c.sets[k])
            if (m.r_index[static_cast<std::size_t>(i - 1)] != m.r_set[k]) {
                out.quasibalanced = false;
                break;
            }
    return out;
}

SubsetCollection standard_collection(const std::string& kind, int n, int param) {
    if (n < 1) throw config_error("standard_collection: n must be >= 1");
    std::vector<std::vector<int>> sets;
    if (kind == "singletons") {
        for (int i = 1; i <= n; ++i) sets.push_back({i});
    } else if (kind == "leave_one_out") {
        if (n < 2) throw config_error("leave_one_out needs n >= 2");
        for (int skip = 1; skip <= n; ++skip) {
            std::vector<int> s;
            for (int i = 1; i <= n; ++i)
                if (i != skip) s.push_back(i);
            sets.push_back(std::move(s));
        }
    } else if (kind == "all_m_subsets") {
        const int m = param;
        if (m < 1 || m > n)
            throw config_error("all_m_subsets: need 1 <= m <= n, got m = " +
                               std::to_string(m));
        std::vector<int> idx(static_cast<std::size_t>(m));
        // Standard lexicographic m-combination walk.
        for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            sets.push_back(idx);
            int j = m - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - (m - 1 - j)) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < m; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    } else if (kind == "sliding_window") {
        const int k = param;
        if (k < 1 || k > n)
            throw config_error("sliding_window: need 1 <= k <= n, got k = " +
                               std::to_string(k));
        for (int start = 1; start + k - 1 <= n; ++start) {
            std::vector<int> s;
            for (int i = start; i < start + k; ++i) s.push_back(i);
            sets.push_back(std::move(s));
        }
    } else {
        throw config_error("unknown standard collection kind '" + kind + "'");
    }
    return SubsetCollection::make(n, std::move(sets));
}

SubsetCollection augment_to_balanced(const SubsetCollection& c) {
    Multiplicities m = multiplicities(c);
    std::vector<std::vector<int>> sets = c.sets;
    // Add each deficient index to sets that lack it until it reaches count r.
    // A set lacking i always exists while r(i) < r, since |C| >= r.
    for (int i = 1; i <= c.n; ++i) {
        int need = m.r - m.r_index[static_cast<std::size_t>(i - 1)];
        for (std::size_t k = 0; k < sets.size() && need > 0; ++k) {
            if (std::binary_search(sets[k].begin(), sets[k].end(), i)) continue;
            sets[k].insert(
                std::lower_bound(sets[k].begin(), sets[k].end(), i), i);
            --need;
        }
        if (need > 0)
            throw error("augment_to_balanced: ran out of sets to extend");
    }
    return SubsetCollection::make(c.n, std::move(sets));
}

bool validate_packing(const SubsetCollection& c, const FractionalPacking& p) {
    if (p.beta.size() != c.sets.size())
        throw config_error("packing: expected " + std::to_string(c.sets.size()) +
                           " coefficients, got " + std::to_string(p.beta.size()));
    for (double b : p.beta)
        if (!(b >= 0.0) || !std::isfinite(b)) return false;
    for (int i = 1; i <= c.n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < c.sets.size(); ++k)
            if (std::binary_search(c.sets[k].begin(), c.sets[k].end(), i))
                sum += p.beta[k];
        if (sum > 1.0 + 1e-12) return false;
    }
    return true;
}

FractionalPacking uniform_packing(const SubsetCollection& c) {
    const Multiplicities m = multiplicities(c);
    return {std::vector<double>(c.sets.size(), 1.0 / m.r)};
}

FractionalPacking natural_packing(const SubsetCollection& c) {
    const Multiplicities m = multiplicities(c);
    FractionalPacking p;
    p.beta.reserve(c.sets.size());
    for (int rs : m.r_set) p.beta.push_back(1.0 / rs);
    return p;
}

FractionalPacking optimize_packing_lp(const SubsetCollection& c,
                                      std::vector<double> objective) {
    if (objective.empty()) objective.assign(c.sets.size(), 1.0);
    if (objective.size() != c.sets.size())
        throw config_error("packing objective: size mismatch");
    for (double v : objective)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw config_error("packing objective: weights must be >= 0");

    const auto rows = static_cast<std::size_t>(c.n);
    std::vector<std::vector<double>> A(rows,
                                       std::vector<double>(c.sets.size(), 0.0));
    for (std::size_t k = 0; k < c.sets.size(); ++k)
        for (int i : c.sets[k]) A[static_cast<std::size_t>(i - 1)][k] = 1.0;

    const LpResult r =
        simplex_maximize(A, std::vector<double>(rows, 1.0), objective);
    return {r.x};
}

WeightVector WeightVector::make(std::vector<double> w) {
    double sum = 0.0;
    for (double v : w) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw config_error("weights must be >= 0 and finite");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw config_error("weights must sum to 1 (got " + std::to_string(sum) +
                           ")");
    WeightVector out;
    out.w = std::move(w);
    return out;
}

WeightVector WeightVector::uniform(std::size_t count) {
    if (count == 0) throw config_error("weights: empty collection");
    return make(std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

double WeightVector::entropy() const {
    double h = 0.0;
    for (double v : w)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

double discrete_kl(const WeightVector& w, const std::vector<double>& q) {
    if (q.size() != w.w.size()) throw config_error("discrete_kl: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (w.w[i] <= 0.0) continue;
        if (!(q[i] > 0.0))
            throw domain_error("discrete_kl: reference weight must be > 0 "
                               "where w is positive");
        d += w.w[i] * std::log(w.w[i] / q[i]);
    }
    return d;
}

}  // namespace infosum
