// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] must point at the CLI binary (used by the determinism criterion).

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "infosum/anova.hpp"
#include "infosum/clt_experiments.hpp"
#include "infosum/json_io.hpp"

using namespace infosum;

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

const DistributionSpec kMixtureSpec = DistributionSpec::mixture(
    {{0.5, -1.0, 0.25}, {0.5, 1.0, 0.25}});

std::vector<DistributionSpec> iid(const DistributionSpec& s, int n) {
    return std::vector<DistributionSpec>(static_cast<std::size_t>(n), s);
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
};

// ------------------------------------------------------------------- 1 ----

bool gaussian_closed_forms(std::string& detail) {
    double worst = 0.0;
    for (double v : {0.5, 1.0, 4.0}) {
        const GridDensity d = build_density(DistributionSpec::gaussian(0, v));
        const double h_want = 0.5 * std::log(kTwoPiE * v);
        const double i_want = 1.0 / v;
        worst = std::max(worst, std::abs(entropy(d) - h_want) / std::abs(h_want));
        worst = std::max(worst,
                         std::abs(fisher_information(d) - i_want) / i_want);
    }
    detail = "max rel err " + fmt_double(worst);
    return worst < 1e-4;
}

// ------------------------------------------------------------------- 2 ----

bool gaussian_equality_cases(std::string& detail) {
    double worst_rel_gap = 0.0, worst_side = 0.0;
    for (int n : {3, 4}) {
        const SumSystem sys(iid(DistributionSpec::gaussian(0, 1), n));
        const std::vector<SubsetCollection> cs = {
            standard_collection("singletons", n),
            standard_collection("leave_one_out", n),
            standard_collection("all_m_subsets", n, 2)};
        for (const SubsetCollection& c : cs) {
            const InequalityReport fii = verify_fii(sys, c);
            const InequalityReport epi = verify_subset_epi(sys, c);
            worst_rel_gap = std::max(worst_rel_gap, std::abs(fii.gap) / fii.lhs);
            worst_rel_gap = std::max(worst_rel_gap, std::abs(epi.gap) / epi.lhs);
            for (double side : {fii.lhs, fii.rhs})
                worst_side = std::max(worst_side, std::abs(side - n) / n);
            for (double side : {epi.lhs, epi.rhs})
                worst_side = std::max(
                    worst_side, std::abs(side - kTwoPiE * n) / (kTwoPiE * n));
        }
    }
    detail = "max |gap|/lhs " + fmt_double(worst_rel_gap) + ", max side err " +
             fmt_double(worst_side);
    return worst_rel_gap < 1e-3 && worst_side < 1e-3;
}

// ------------------------------------------------------------------- 3 ----

bool mixture_strict_gaps(std::string& detail) {
    const SumSystem sys(iid(kMixtureSpec, 3));
    const SubsetCollection c = standard_collection("leave_one_out", 3);
    const WeightVector w = WeightVector::uniform(3);
    const std::vector<InequalityReport> reports = {
        verify_subset_epi(sys, c),
        verify_fii(sys, c),
        verify_weighted_fii(sys, c, w),
        verify_entropy_of_sums(sys, c, w),
        verify_relent(sys, c, w),
        verify_refined_fii(sys, c, natural_packing(c)),
        verify_rs_epi(sys, c)};
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (const InequalityReport& r : reports)
        worst_ratio = std::min(worst_ratio, r.gap / r.tolerance);
    detail = "min gap/tolerance " + fmt_double(worst_ratio) + " over " +
             std::to_string(reports.size()) + " verifiers";
    return worst_ratio > 10.0;
}

// ------------------------------------------------------------------- 4 ----

bool de_bruijn_agreement(std::string& detail) {
    const GridDensity g = build_density(DistributionSpec::gaussian(0, 1));
    const GridDensity u =
        heat_perturb(build_density(DistributionSpec::uniform(0, 1)), 0.01);
    const GridDensity m = build_density(kMixtureSpec);
    double worst = 0.0;
    for (const GridDensity* d : {&g, &u, &m})
        worst = std::max(worst, std::abs(de_bruijn_entropy(*d) - entropy(*d)));
    detail = "max |de_bruijn - direct| " + fmt_double(worst);
    return worst < 1e-3;
}

// ------------------------------------------------------------------- 5 ----

bool score_convolution(std::string& detail) {
    const GridDensity g = build_density(DistributionSpec::gaussian(0, 1));
    const GridDensity m = build_density(kMixtureSpec);
    const GridDensity u = build_density(DistributionSpec::uniform(0, 1));
    const double gg = score_convolution_check(g, g);
    const double mg = score_convolution_check(m, g);
    const double gu = score_convolution_check(g, u);
    detail = "residuals " + fmt_double(gg) + ", " + fmt_double(mg) + ", " +
             fmt_double(gu);
    return gg < 5e-3 && mg < 5e-3 && gu < 5e-3;
}

// --------------------------------------------------------------- 6 / 7 ----

Coordinate random_coordinate(std::mt19937& gen, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_d(2, max_size);
    std::uniform_real_distribution<double> val_d(-2.0, 2.0);
    std::uniform_real_distribution<double> prob_d(0.2, 1.0);
    Coordinate c;
    const std::size_t m = size_d(gen);
    double total = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        c.values.push_back(val_d(gen));
        c.probs.push_back(prob_d(gen));
        total += c.probs.back();
    }
    for (double& p : c.probs) p /= total;
    return c;
}

ProductSpace random_space(std::mt19937& gen, int max_n, std::size_t max_size) {
    std::uniform_int_distribution<int> n_d(1, max_n);
    const int n = n_d(gen);
    std::vector<Coordinate> coords;
    for (int j = 0; j < n; ++j) coords.push_back(random_coordinate(gen, max_size));
    return ProductSpace::make(std::move(coords));
}

TableFunction random_table(std::mt19937& gen, const ProductSpace& space) {
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    TableFunction f;
    f.values.resize(space.total());
    for (double& v : f.values) v = d(gen);
    return f;
}

bool anova_exactness(std::string& detail) {
    std::mt19937 gen(20260814);
    double worst_recon = 0.0, worst_inner = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const ProductSpace space = random_space(gen, 4, 5);
        const TableFunction f = random_table(gen, space);
        const AnovaDecomposition dec = anova_decompose(f, space);
        for (std::size_t i = 0; i < space.total(); ++i) {
            double sum = 0.0;
            for (const TableFunction& comp : dec.components) sum += comp.values[i];
            worst_recon = std::max(worst_recon, std::abs(sum - f.values[i]));
        }
        for (std::size_t a = 0; a < dec.components.size(); ++a)
            for (std::size_t b = a + 1; b < dec.components.size(); ++b)
                worst_inner = std::max(
                    worst_inner,
                    std::abs(table_inner(dec.components[a], dec.components[b],
                                         space)));
    }
    detail = "max reconstruction " + fmt_double(worst_recon) +
             ", max pairwise inner " + fmt_double(worst_inner);
    return worst_recon < 1e-10 && worst_inner < 1e-10;
}

// Random collection over 1..n (nonempty sets, duplicates allowed).
SubsetCollection random_collection(std::mt19937& gen, int n, int max_sets) {
    std::uniform_int_distribution<int> count_d(1, max_sets);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::vector<int>> sets;
    const int count = count_d(gen);
    for (int k = 0; k < count; ++k) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
            if (coin(gen) < 0.45) s.push_back(i);
        if (s.empty()) s.push_back(std::uniform_int_distribution<int>(1, n)(gen));
        sets.push_back(std::move(s));
    }
    return SubsetCollection::make(n, std::move(sets));
}

std::vector<double> random_zero_mean_subtable(std::mt19937& gen,
                                              const ProductSpace& space,
                                              const std::vector<int>& s) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::size_t size = 1;
    for (int i : s) size *= space.size(i - 1);
    std::vector<double> t(size);
    for (double& v : t) v = d(gen);
    // Subtract the weighted mean (coordinates ordered ascending, row-major,
    // last coordinate fastest).
    double mean = 0.0;
    for (std::size_t flat = 0; flat < size; ++flat) {
        double p = 1.0;
        std::size_t rem = flat;
        for (std::size_t j = s.size(); j-- > 0;) {
            const auto sz = space.size(s[j] - 1);
            const std::size_t idx = rem % sz;
            rem /= sz;
            p *= space.coords[static_cast<std::size_t>(s[j] - 1)].probs[idx];
        }
        mean += p * t[flat];
    }
    for (double& v : t) v -= mean;
    return t;
}

bool variance_drop_sweep(std::string& detail) {
    std::mt19937 gen(777);
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 100; ++trial) {
        const ProductSpace space = random_space(gen, 4, 4);
        const SubsetCollection c = random_collection(gen, space.n(), 5);
        std::vector<std::vector<double>> subtables;
        for (const auto& s : c.sets)
            subtables.push_back(random_zero_mean_subtable(gen, space, s));
        const CAdditiveFunction u =
            CAdditiveFunction::from_subtables(space, c, subtables);

        const VarianceDropResult uni = variance_drop_bound(u, space);
        worst_slack = std::min(worst_slack, uni.rhs - uni.lhs);
        const FractionalPacking lp = optimize_packing_lp(c);
        const VarianceDropResult packed = variance_drop_bound(u, space, lp);
        if (!std::isinf(packed.rhs))
            worst_slack = std::min(worst_slack, packed.rhs - packed.lhs);
    }

    // Hoeffding equality: m = 1 U-statistic over an i.i.d. space.
    std::mt19937 hgen(42);
    const Coordinate coord = random_coordinate(hgen, 4);
    const ProductSpace hspace = ProductSpace::iid(4, coord);
    std::vector<double> psi(coord.values.size());
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    double mean = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
        psi[k] = d(hgen);
        mean += coord.probs[k] * psi[k];
    }
    for (double& v : psi) v -= mean;
    const VarianceDropResult h = hoeffding_u_variance(psi, 1, hspace);
    const double heq = std::abs(h.lhs - h.rhs);

    detail = "min slack " + fmt_double(worst_slack) + ", hoeffding |lhs-rhs| " +
             fmt_double(heq);
    return worst_slack >= -1e-10 && heq < 1e-12;
}

// ------------------------------------------------------------------- 8 ----

std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
    const std::size_t m = b.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < m; ++row)
            if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
        if (std::abs(a[piv][col]) < 1e-9) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col) continue;
            const double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < m; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(m);
    for (std::size_t k = 0; k < m; ++k) x[k] = b[k] / a[k][k];
    return x;
}

double brute_force_lp_optimum(const SubsetCollection& c,
                              const std::vector<double>& objective) {
    const std::size_t m = c.sets.size();
    const auto n = static_cast<std::size_t>(c.n);
    // Constraint rows: n cover rows (sum over sets containing i <= 1), then
    // m nonnegativity rows (-beta_k <= 0).
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<double> row(m, 0.0);
        for (std::size_t k = 0; k < m; ++k)
            if (std::find(c.sets[k].begin(), c.sets[k].end(),
                          static_cast<int>(i)) != c.sets[k].end())
                row[k] = 1.0;
        rows.push_back(std::move(row));
        rhs.push_back(1.0);
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<double> row(m, 0.0);
        row[k] = -1.0;
        rows.push_back(std::move(row));
        rhs.push_back(0.0);
    }

    double best = -std::numeric_limits<double>::infinity();
    std::vector<bool> pick(rows.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
    std::sort(pick.begin(), pick.end());  // lowest permutation first
    do {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (pick[r]) {
                a.push_back(rows[r]);
                b.push_back(rhs[r]);
            }
        const auto x = solve_square(std::move(a), std::move(b));
        if (!x) continue;
        bool feasible = true;
        for (std::size_t r = 0; r < rows.size() && feasible; ++r) {
            double dot = 0.0;
            for (std::size_t k = 0; k < m; ++k) dot += rows[r][k] * (*x)[k];
            feasible = dot <= rhs[r] + 1e-9;
        }
        if (!feasible) continue;
        double val = 0.0;
        for (std::size_t k = 0; k < m; ++k) val += objective[k] * (*x)[k];
        best = std::max(best, val);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

bool lp_matches_brute_force(std::string& detail) {
    std::vector<SubsetCollection> corpus;
    for (int n = 2; n <= 5; ++n) {
        corpus.push_back(standard_collection("singletons", n));
        corpus.push_back(standard_collection("leave_one_out", n));
        corpus.push_back(standard_collection("all_m_subsets", n, 2));
        corpus.push_back(standard_collection("sliding_window", n, 2));
    }
    std::mt19937 gen(1234);
    for (int trial = 0; trial < 24; ++trial)
        corpus.push_back(random_collection(
            gen, std::uniform_int_distribution<int>(2, 5)(gen), 8));

    std::uniform_real_distribution<double> obj_d(0.0, 2.0);
    double worst = 0.0;
    for (const SubsetCollection& c : corpus) {
        if (c.sets.size() > 8) continue;
        std::vector<std::vector<double>> objectives = {
            std::vector<double>(c.sets.size(), 1.0)};
        objectives.emplace_back();
        for (std::size_t k = 0; k < c.sets.size(); ++k)
            objectives.back().push_back(obj_d(gen));
        for (const auto& obj : objectives) {
            const FractionalPacking p = optimize_packing_lp(c, obj);
            double val = 0.0;
            for (std::size_t k = 0; k < obj.size(); ++k)
                val += obj[k] * p.beta[k];
            worst = std::max(worst,
                             std::abs(val - brute_force_lp_optimum(c, obj)));
        }
    }
    detail = "max |lp - brute force| " + fmt_double(worst) + " over " +
             std::to_string(corpus.size()) + " collections";
    return worst < 1e-9;
}

// ------------------------------------------------------------------- 9 ----

bool clt_monotonicity(std::string& detail) {
    const CltSweepResult smooth_uniform =
        iid_info_sequence(DistributionSpec::uniform(0, 1), 6, 0.01);
    const CltSweepResult mixture = iid_info_sequence(kMixtureSpec, 6);
    const CltSweepResult gauss =
        iid_info_sequence(DistributionSpec::gaussian(0, 1), 6);

    double min_h_step = std::numeric_limits<double>::infinity();
    double max_i_step = -std::numeric_limits<double>::infinity();
    for (const CltSweepResult* r : {&smooth_uniform, &mixture})
        for (std::size_t k = 1; k < r->rows.size(); ++k) {
            min_h_step = std::min(min_h_step, r->rows[k].gap_prev);
            max_i_step = std::max(max_i_step,
                                  r->rows[k].fisher - r->rows[k - 1].fisher);
        }
    double gauss_flat = 0.0;
    for (std::size_t k = 1; k < gauss.rows.size(); ++k)
        gauss_flat = std::max(gauss_flat, std::abs(gauss.rows[k].gap_prev));

    detail = "min H step " + fmt_double(min_h_step) + ", max I step " +
             fmt_double(max_i_step) + ", gaussian |step| " +
             fmt_double(gauss_flat);
    return min_h_step >= -1e-4 && max_i_step <= 1e-4 && gauss_flat <= 1e-4;
}

// ------------------------------------------------------------------ 10 ----

bool monotone_on_average_cases(std::string& detail) {
    const SumSystem normals({DistributionSpec::gaussian(0, 1),
                             DistributionSpec::gaussian(0, 2),
                             DistributionSpec::gaussian(0, 3)});
    const SubsetCollection c = standard_collection("leave_one_out", 3);
    const InequalityReport eq = monotone_on_average(normals, c);
    double worst_eq = 0.0;
    for (const char* key : {"entropy", "inv_fisher", "entropy_power"}) {
        const double gap = eq.metadata.at(key).at("gap").get<double>();
        const double scale =
            std::max({1.0, std::abs(eq.metadata.at(key).at("lhs").get<double>()),
                      std::abs(eq.metadata.at(key).at("rhs").get<double>())});
        worst_eq = std::max(worst_eq, std::abs(gap) / scale);
    }

    const SumSystem mixtures(iid(kMixtureSpec, 3));
    const InequalityReport strict = monotone_on_average(mixtures, c);
    double min_gap = std::numeric_limits<double>::infinity();
    for (const char* key : {"entropy", "inv_fisher", "entropy_power"})
        min_gap = std::min(min_gap,
                           strict.metadata.at(key).at("gap").get<double>());

    detail = "normals max |gap|/scale " + fmt_double(worst_eq) +
             ", mixtures min gap " + fmt_double(min_gap);
    return worst_eq < 1e-3 && min_gap > 0.0;
}

// ------------------------------------------------------------------ 11 ----

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool cli_determinism(const std::string& cli, std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "infosum_acceptance";
    fs::create_directories(dir);

    const auto write = [&](const char* name, const char* text) {
        std::ofstream out(dir / name);
        out << text;
        return (dir / name).string();
    };
    const std::string verify_in = write("verify.json", R"({
      "system": [
        {"family": "gaussian", "mean": 0, "variance": 1},
        {"family": "gaussian", "mean": 0, "variance": 1},
        {"family": "gaussian", "mean": 0, "variance": 1}
      ],
      "collection": {"standard": "all_m_subsets", "n": 3, "m": 2},
      "checks": ["subset_epi", "fii", "weighted_fii", "entropy_of_sums",
                 "relent", "refined_fii", "rs_epi"]
    })");
    const std::string sweep_in = write(
        "sweep.json",
        R"({"spec": {"family": "uniform", "a": 0, "b": 1}, "n_max": 6, "smooth_t": 0.01})");
    const std::string anova_in = write("anova.json", R"({
      "space": {"iid": {"values": [-1, 1], "probs": [0.5, 0.5]}, "n": 3},
      "collection": {"n": 3, "sets": [[1, 2], [2, 3]]},
      "subtables": [[1, -1, -1, 1], [0.5, -0.5, -0.5, 0.5]]
    })");
    const std::string pack_in = write(
        "pack.json",
        R"({"collection": {"n": 4, "sets": [[1, 2], [2, 3], [3, 4]]}})");
    const std::string score_in = write("score.json", R"({
      "pairs": [
        {"a": {"family": "gaussian", "mean": 0, "variance": 1},
         "b": {"family": "gaussian", "mean": 0, "variance": 1}},
        {"a": {"family": "gaussian_mixture",
               "components": [{"weight": 0.5, "mean": -1, "variance": 0.25},
                               {"weight": 0.5, "mean": 1, "variance": 0.25}]},
         "b": {"family": "gaussian", "mean": 0, "variance": 1}}
      ]
    })");

    const std::vector<std::pair<std::string, std::string>> jobs = {
        {"verify", verify_in},
        {"clt-sweep", sweep_in},
        {"anova-demo", anova_in},
        {"pack-optimize", pack_in},
        {"score-check", score_in}};

    int artifacts = 0;
    for (const auto& [command, input] : jobs) {
        for (const std::string format : {"json", "csv"}) {
            const fs::path out1 = dir / (command + "_1." + format);
            const fs::path out2 = dir / (command + "_2." + format);
            const std::string base = command + " --input " + input +
                                     " --seed 20260814 --format " + format +
                                     " --output ";
            const CliRun r1 = run_cli(cli, base + out1.string());
            const CliRun r2 = run_cli(cli, base + out2.string());
            if (r1.exit_code != 0 || r2.exit_code != 0) {
                detail = command + " (" + format + ") exited " +
                         std::to_string(r1.exit_code) + "/" +
                         std::to_string(r2.exit_code) + ": " + r1.output;
                return false;
            }
            const std::string b1 = slurp(out1), b2 = slurp(out2);
            if (b1.empty() || b1 != b2) {
                detail = command + " (" + format + ") artifacts differ";
                return false;
            }
            ++artifacts;
        }
    }
    detail = std::to_string(artifacts) + " artifact pairs byte-identical";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    const std::vector<Criterion> criteria = {
        {1, "gaussian closed forms (H, I) within 1e-4 relative",
         gaussian_closed_forms},
        {2, "gaussian equality cases for fii/subset_epi, sides n and 2*pi*e*n",
         gaussian_equality_cases},
        {3, "mixture leave-one-out gaps exceed 10x tolerance",
         mixture_strict_gaps},
        {4, "de Bruijn identity within 1e-3 of direct entropy",
         de_bruijn_agreement},
        {5, "score convolution residual < 5e-3 on the three pairs",
         score_convolution},
        {6, "ANOVA reconstruction and orthogonality exact to 1e-10",
         anova_exactness},
        {7, "variance drop slack >= -1e-10; hoeffding m=1 equality",
         variance_drop_sweep},
        {8, "packing LP matches vertex enumeration within 1e-9",
         lp_matches_brute_force},
        {9, "CLT sweeps monotone within 1e-4 band; gaussian flat",
         clt_monotonicity},
        {10, "monotonicity on average: normal equality, mixture strict",
         monotone_on_average_cases},
        {11, "two same-seed CLI suite runs are byte-identical",
         [&cli](std::string& detail) {
             if (cli.empty()) {
                 detail = "usage: acceptance_test <path-to-cli>";
                 return false;
             }
             return cli_determinism(cli, detail);
         }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s — %s (%s)\n", c.id, ok ? "PASS" : "FAIL",
                    c.label, detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
