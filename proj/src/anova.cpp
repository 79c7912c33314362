#include "infosum/anova.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace infosum {

ProductSpace ProductSpace::make(std::vector<Coordinate> coords) {
    if (coords.empty() || coords.size() > 5)
        throw config_error("product space: need 1..5 coordinates");
    for (const auto& c : coords) {
        if (c.values.empty() || c.values.size() > 8)
            throw config_error("product space: coordinate sizes must be 1..8");
        if (c.probs.size() != c.values.size())
            throw config_error("product space: probs/values size mismatch");
        double sum = 0.0;
        for (double p : c.probs) {
            if (!(p > 0.0)) throw config_error("product space: probs must be > 0");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw config_error("product space: probs must sum to 1 (got " +
                               std::to_string(sum) + ")");
    }
    ProductSpace s;
    s.coords = std::move(coords);
    return s;
}

ProductSpace ProductSpace::iid(int n, Coordinate c) {
    return make(std::vector<Coordinate>(static_cast<std::size_t>(n), std::move(c)));
}

std::size_t ProductSpace::total() const {
    std::size_t t = 1;
    for (const auto& c : coords) t *= c.values.size();
    return t;
}

std::size_t ProductSpace::stride(int j) const {
    std::size_t s = 1;
    for (int k = n() - 1; k > j; --k) s *= size(k);
    return s;
}

double ProductSpace::point_prob(std::size_t flat) const {
    double p = 1.0;
    for (int j = n() - 1; j >= 0; --j) {
        const std::size_t sz = size(j);
        p *= coords[static_cast<std::size_t>(j)].probs[flat % sz];
        flat /= sz;
    }
    return p;
}

namespace {

void check_table(const TableFunction& f, const ProductSpace& space,
                 const char* who) {
    if (f.values.size() != space.total())
        throw config_error(std::string(who) + ": table size " +
                           std::to_string(f.values.size()) +
                           " does not match product grid size " +
                           std::to_string(space.total()));
}

}  // namespace

double table_mean(const TableFunction& f, const ProductSpace& space) {
    check_table(f, space, "table_mean");
    double m = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        m += f.values[i] * space.point_prob(i);
    return m;
}

double table_inner(const TableFunction& f, const TableFunction& g,
                   const ProductSpace& space) {
    check_table(f, space, "table_inner");
    check_table(g, space, "table_inner");
    double m = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        m += f.values[i] * g.values[i] * space.point_prob(i);
    return m;
}

double table_variance(const TableFunction& f, const ProductSpace& space) {
    const double m = table_mean(f, space);
    return table_inner(f, f, space) - m * m;
}

TableFunction project_out(const TableFunction& f, int j,
                          const ProductSpace& space) {
    check_table(f, space, "project_out");
    if (j < 1 || j > space.n())
        throw config_error("project_out: coordinate outside 1.." +
                           std::to_string(space.n()));
    const int jj = j - 1;
    const std::size_t sz = space.size(jj);
    const std::size_t str = space.stride(jj);
    const auto& probs = space.coords[static_cast<std::size_t>(jj)].probs;

    TableFunction out;
    out.values.assign(f.values.size(), 0.0);
    const std::size_t block = str * sz;
    for (std::size_t base = 0; base < f.values.size(); base += block)
        for (std::size_t inner = 0; inner < str; ++inner) {
            double avg = 0.0;
            for (std::size_t k = 0; k < sz; ++k)
                avg += probs[k] * f.values[base + inner + k * str];
            for (std::size_t k = 0; k < sz; ++k)
                out.values[base + inner + k * str] = avg;
        }
    return out;
}

const TableFunction& AnovaDecomposition::component(
    const std::vector<int>& t) const {
    std::size_t mask = 0;
    for (int j : t) mask |= std::size_t{1} << (j - 1);
    return components.at(mask);
}

AnovaDecomposition anova_decompose(const TableFunction& f,
                                   const ProductSpace& space) {
    check_table(f, space, "anova_decompose");
    const int n = space.n();
    AnovaDecomposition d;
    d.components.resize(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < d.components.size(); ++mask) {
        TableFunction comp = f;
        for (int j = 1; j <= n; ++j) {
            TableFunction proj = project_out(comp, j, space);
            if (mask & (std::size_t{1} << (j - 1))) {
                for (std::size_t i = 0; i < comp.values.size(); ++i)
                    comp.values[i] -= proj.values[i];
            } else {
                comp = std::move(proj);
            }
        }
        d.components[mask] = std::move(comp);
    }
    return d;
}

CAdditiveFunction CAdditiveFunction::from_subtables(
    const ProductSpace& space, SubsetCollection collection,
    const std::vector<std::vector<double>>& subtables) {
    if (collection.n != space.n())
        throw config_error("c_additive: collection is over " +
                           std::to_string(collection.n) +
                           " indices but the space has " +
                           std::to_string(space.n()));
    if (subtables.size() != collection.sets.size())
        throw config_error("c_additive: one subtable per set required");

    CAdditiveFunction u;
    u.components.reserve(subtables.size());
    for (std::size_t k = 0; k < subtables.size(); ++k) {
        const auto& s = collection.sets[k];
        std::size_t expect = 1;
        for (int j : s) expect *= space.size(j - 1);
        if (subtables[k].size() != expect)
            throw config_error("c_additive: subtable " + std::to_string(k) +
                               " has " + std::to_string(subtables[k].size()) +
                               " entries, expected " + std::to_string(expect));

        // Lift: full-grid value = subtable at the coordinates of s
        // (row-major within s, increasing coordinate order).
        TableFunction lifted;
        lifted.values.resize(space.total());
        for (std::size_t flat = 0; flat < space.total(); ++flat) {
            std::size_t sub = 0;
            for (int j : s) {
                const std::size_t idx =
                    (flat / space.stride(j - 1)) % space.size(j - 1);
                sub = sub * space.size(j - 1) + idx;
            }
            lifted.values[flat] = subtables[k][sub];
        }
        const double m = table_mean(lifted, space);
        if (std::abs(m) > 1e-12)
            throw config_error("c_additive: component " + std::to_string(k) +
                               " has mean " + std::to_string(m) +
                               "; components must be mean zero");
        u.components.push_back(std::move(lifted));
    }
    u.collection = std::move(collection);
    return u;
}

TableFunction CAdditiveFunction::sum() const {
    TableFunction total;
    if (components.empty()) return total;
    total.values.assign(components[0].values.size(), 0.0);
    for (const auto& c : components)
        for (std::size_t i = 0; i < total.values.size(); ++i)
            total.values[i] += c.values[i];
    return total;
}

namespace {

VarianceDropResult drop_bound(const CAdditiveFunction& u,
                              const ProductSpace& space,
                              const std::vector<double>& inv_coeff) {
    const TableFunction total = u.sum();
    VarianceDropResult r;
    r.lhs = table_inner(total, total, space);
    r.rhs = 0.0;
    for (std::size_t k = 0; k < u.components.size(); ++k) {
        const double e2 = table_inner(u.components[k], u.components[k], space);
        if (e2 == 0.0) continue;
        if (inv_coeff[k] == 0.0) {
            r.rhs = std::numeric_limits<double>::infinity();
            break;
        }
        r.rhs += e2 / inv_coeff[k];
    }
    if (!(r.lhs <= r.rhs + 1e-12))
        throw error("variance drop bound failed: lhs " + std::to_string(r.lhs) +
                    " > rhs " + std::to_string(r.rhs));
    return r;
}

}  // namespace

VarianceDropResult variance_drop_bound(const CAdditiveFunction& u,
                                       const ProductSpace& space) {
    const Multiplicities m = multiplicities(u.collection);
    return drop_bound(u, space,
                      std::vector<double>(u.components.size(), 1.0 / m.r));
}

VarianceDropResult variance_drop_bound(const CAdditiveFunction& u,
                                       const ProductSpace& space,
                                       const FractionalPacking& beta) {
    if (!validate_packing(u.collection, beta))
        throw precondition_violation(
            "variance_drop_bound: beta is not a fractional packing");
    return drop_bound(u, space, beta.beta);
}

VarianceDropResult hoeffding_u_variance(const std::vector<double>& psi, int m,
                                        const ProductSpace& space) {
    const int n = space.n();
    if (m < 1 || m > n)
        throw config_error("hoeffding: need 1 <= m <= n");
    for (int j = 1; j < n; ++j) {
        const auto& a = space.coords[0];
        const auto& b = space.coords[static_cast<std::size_t>(j)];
        if (a.values != b.values || a.probs != b.probs)
            throw precondition_violation(
                "hoeffding: space coordinates are not identically distributed");
    }
    const std::size_t sz = space.size(0);
    std::size_t expect = 1;
    for (int j = 0; j < m; ++j) expect *= sz;
    if (psi.size() != expect)
        throw config_error("hoeffding: psi table must have size^m entries");

    // Mean zero and full symmetry under argument permutations.
    ProductSpace m_space = ProductSpace::iid(m, space.coords[0]);
    TableFunction psi_f{psi};
    if (std::abs(table_mean(psi_f, m_space)) > 1e-12)
        throw precondition_violation("hoeffding: psi must be mean zero");
    {
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::size_t> idx(static_cast<std::size_t>(m));
        do {
            for (std::size_t flat = 0; flat < psi.size(); ++flat) {
                std::size_t rem = flat;
                for (int j = m - 1; j >= 0; --j) {
                    idx[static_cast<std::size_t>(j)] = rem % sz;
                    rem /= sz;
                }
                std::size_t pflat = 0;
                for (int j = 0; j < m; ++j)
                    pflat = pflat * sz +
                            idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                if (std::abs(psi[flat] - psi[pflat]) > 1e-12)
                    throw precondition_violation(
                        "hoeffding: psi is not symmetric in its arguments");
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // U = average of psi over all m-subsets, lifted to the n-grid.
    std::vector<std::vector<int>> msets =
        standard_collection("all_m_subsets", n, m).sets;
    TableFunction u_f;
    u_f.values.assign(space.total(), 0.0);
    for (const auto& s : msets) {
        for (std::size_t flat = 0; flat < space.total(); ++flat) {
            std::size_t sub = 0;
            for (int j : s)
                sub = sub * sz + (flat / space.stride(j - 1)) % sz;
            u_f.values[flat] += psi[sub];
        }
    }
    const double scale = 1.0 / static_cast<double>(msets.size());
    for (double& v : u_f.values) v *= scale;

    VarianceDropResult r;
    r.lhs = table_inner(u_f, u_f, space);
    r.rhs = static_cast<double>(m) / n * table_inner(psi_f, psi_f, m_space);
    if (!(r.lhs <= r.rhs + 1e-12))
        throw error("hoeffding bound failed: lhs " + std::to_string(r.lhs) +
                    " > rhs " + std::to_string(r.rhs));
    return r;
}

}  // namespace infosum
