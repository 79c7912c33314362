// infosum: verify subset-sum information inequalities, run CLT sweeps,
// decompose tabulated functions, optimize fractional packings, and check the
// score-convolution identity, all driven by JSON input files.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "infosum/anova.hpp"
#include "infosum/clt_experiments.hpp"
#include "infosum/json_io.hpp"

using nlohmann::json;
using namespace infosum;

namespace {

struct Options {
    std::string input;
    std::string output;       // empty = stdout
    std::string format = "json";
    std::size_t grid_points = 4096;
    double grid_sigmas = 8.0;
    double tol_rel = 1e-3;
    double tol_abs = 1e-6;
    std::uint64_t seed = 0;
    int n_max = 0;  // 0 = take from the input file (default 6)

    GridConfig grid() const { return GridConfig{grid_sigmas, grid_points}; }
    Tolerance tolerance() const { return Tolerance{tol_abs, tol_rel}; }
};

json load_input(const Options& o) {
    std::ifstream in(o.input);
    if (!in) throw config_error("cannot open input file: " + o.input);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error(o.input + ": " + e.what());
    }
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + o.output);
    out << text;
}

json envelope(const Options& o, const std::string& command) {
    return json{{"command", command},
                {"seed", o.seed},
                {"grid",
                 {{"points", o.grid_points},
                  {"half_width_sigmas", o.grid_sigmas}}},
                {"tolerance", {{"abs", o.tol_abs}, {"rel", o.tol_rel}}}};
}

std::string csv_envelope(const Options& o, const std::string& command) {
    return "# infosum " + command + " seed=" + std::to_string(o.seed) +
           " grid_points=" + std::to_string(o.grid_points) +
           " grid_sigmas=" + fmt_double(o.grid_sigmas) +
           " tol_abs=" + fmt_double(o.tol_abs) +
           " tol_rel=" + fmt_double(o.tol_rel) + "\n";
}

std::string join_set(const std::vector<int>& s, const char* sep = "+") {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(s[i]);
    }
    return out;
}

// Canonicalizing a collection sorts its sets; any arrays given parallel to
// the original "sets" order (weights, packings, objectives, subtables) have
// to ride along. Returns the canonical collection and permutes each named
// array inside `entry` in place.
SubsetCollection canonicalize_with_arrays(
    json& entry, const std::string& path,
    const std::vector<std::string>& parallel_keys) {
    if (entry.contains("standard"))  // standard collections are born canonical
        return collection_from_json(entry, path);

    const auto n = static_cast<int>(require_number(entry, "n", path));
    const json& sets_json = require_field(entry, "sets", path);
    if (!sets_json.is_array() || sets_json.empty())
        throw config_error(path + ".sets: expected a nonempty array of arrays");

    std::vector<std::vector<int>> sets;
    for (std::size_t i = 0; i < sets_json.size(); ++i) {
        if (!sets_json[i].is_array())
            throw config_error(path + ".sets[" + std::to_string(i) +
                               "]: expected an array of indices");
        auto s = sets_json[i].get<std::vector<int>>();
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }

    std::vector<std::size_t> perm(sets.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return sets[a] < sets[b]; });

    std::vector<std::vector<int>> sorted_sets;
    sorted_sets.reserve(sets.size());
    for (std::size_t idx : perm) sorted_sets.push_back(sets[idx]);

    for (const std::string& key : parallel_keys) {
        if (!entry.contains(key)) continue;
        const json& arr = entry.at(key);
        if (!arr.is_array() || arr.size() != sets.size())
            throw config_error(path + "." + key + ": expected an array parallel to sets (" +
                               std::to_string(sets.size()) + " entries)");
        json permuted = json::array();
        for (std::size_t idx : perm) permuted.push_back(arr[idx]);
        entry[key] = std::move(permuted);
    }
    return SubsetCollection::make(n, std::move(sorted_sets));
}

// ---------------------------------------------------------------- verify --

const std::vector<std::string> kDefaultChecks = {
    "subset_epi", "fii", "weighted_fii", "entropy_of_sums", "relent",
    "refined_fii"};
const std::vector<std::string> kAllChecks = {
    "subset_epi", "fii",         "weighted_fii", "entropy_of_sums",
    "relent",     "refined_fii", "rs_epi"};

struct VerifyEntry {
    SubsetCollection c;
    WeightVector weights;
    FractionalPacking packing;
    std::vector<std::string> checks;
};

VerifyEntry parse_verify_entry(json entry, const std::string& path) {
    VerifyEntry out;
    out.c = canonicalize_with_arrays(entry, path, {"weights", "packing"});

    if (entry.contains("weights")) {
        try {
            out.weights =
                WeightVector::make(entry.at("weights").get<std::vector<double>>());
        } catch (const json::exception& e) {
            throw config_error(path + ".weights: " + e.what());
        } catch (const config_error& e) {
            throw config_error(path + ".weights: " + e.what());
        }
        if (out.weights.w.size() != out.c.sets.size())
            throw config_error(path + ".weights: expected " +
                               std::to_string(out.c.sets.size()) + " entries");
    } else {
        out.weights = WeightVector::uniform(out.c.sets.size());
    }

    if (entry.contains("packing")) {
        try {
            out.packing.beta = entry.at("packing").get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw config_error(path + ".packing: " + e.what());
        }
        if (out.packing.beta.size() != out.c.sets.size())
            throw config_error(path + ".packing: expected " +
                               std::to_string(out.c.sets.size()) + " entries");
    } else {
        out.packing = natural_packing(out.c);
    }

    if (entry.contains("checks")) {
        const json& checks = entry.at("checks");
        if (!checks.is_array() || checks.empty())
            throw config_error(path + ".checks: expected a nonempty array of names");
        for (const json& c : checks) {
            if (!c.is_string())
                throw config_error(path + ".checks: expected strings");
            const std::string name = c.get<std::string>();
            if (std::find(kAllChecks.begin(), kAllChecks.end(), name) ==
                kAllChecks.end())
                throw config_error(path + ".checks: unknown check '" + name + "'");
            out.checks.push_back(name);
        }
    } else {
        out.checks = kDefaultChecks;
    }
    return out;
}

InequalityReport dispatch_check(const std::string& name, const SumSystem& sys,
                                const VerifyEntry& e, Tolerance tol) {
    if (name == "subset_epi") return verify_subset_epi(sys, e.c, tol);
    if (name == "fii") return verify_fii(sys, e.c, tol);
    if (name == "weighted_fii")
        return verify_weighted_fii(sys, e.c, e.weights, tol);
    if (name == "entropy_of_sums")
        return verify_entropy_of_sums(sys, e.c, e.weights, tol);
    if (name == "relent") return verify_relent(sys, e.c, e.weights, tol);
    if (name == "refined_fii") return verify_refined_fii(sys, e.c, e.packing, tol);
    return verify_rs_epi(sys, e.c, tol);
}

int run_verify(const Options& o) {
    const json in = load_input(o);
    const json& system_json = require_field(in, "system", "input");
    if (!system_json.is_array() || system_json.empty())
        throw config_error("input.system: expected a nonempty array of distributions");
    std::vector<DistributionSpec> specs;
    for (std::size_t i = 0; i < system_json.size(); ++i)
        specs.push_back(spec_from_json(system_json[i],
                                       "input.system[" + std::to_string(i) + "]"));

    std::vector<VerifyEntry> entries;
    if (in.contains("collections")) {
        const json& cs = in.at("collections");
        if (!cs.is_array() || cs.empty())
            throw config_error("input.collections: expected a nonempty array");
        for (std::size_t k = 0; k < cs.size(); ++k)
            entries.push_back(parse_verify_entry(
                cs[k], "input.collections[" + std::to_string(k) + "]"));
    } else {
        json entry = require_field(in, "collection", "input");
        // Top-level weights/packing/checks belong to the single collection.
        for (const char* key : {"weights", "packing", "checks"})
            if (in.contains(key)) entry[key] = in.at(key);
        entries.push_back(parse_verify_entry(entry, "input.collection"));
    }

    const SumSystem sys(specs, o.grid());
    for (std::size_t k = 0; k < entries.size(); ++k)
        if (entries[k].c.n != sys.n())
            throw config_error("input: collection " + std::to_string(k) +
                               " has n=" + std::to_string(entries[k].c.n) +
                               " but the system has " + std::to_string(sys.n()) +
                               " variables");

    struct Row {
        std::string name;
        std::size_t index;
        json body;
        bool satisfied;
    };
    std::vector<Row> rows;
    std::vector<Row> skipped;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        for (const std::string& name : entries[k].checks) {
            try {
                const InequalityReport rep =
                    dispatch_check(name, sys, entries[k], o.tolerance());
                json rj = report_to_json(rep);
                rj["collection_index"] = k;
                rows.push_back({rep.name, k, std::move(rj), rep.satisfied});
            } catch (const precondition_violation& e) {
                skipped.push_back(
                    {name, k,
                     json{{"name", name}, {"collection_index", k}, {"reason", e.what()}},
                     true});
            } catch (const not_evaluable_error& e) {
                json sj{{"name", name}, {"collection_index", k}, {"reason", e.what()}};
                if (!e.offending_set.empty()) sj["offending_set"] = e.offending_set;
                skipped.push_back({name, k, std::move(sj), true});
            }
        }
    }
    const auto by_name = [](const Row& a, const Row& b) {
        return std::tie(a.name, a.index) < std::tie(b.name, b.index);
    };
    std::sort(rows.begin(), rows.end(), by_name);
    std::sort(skipped.begin(), skipped.end(), by_name);

    bool all_satisfied = true;
    for (const Row& r : rows) all_satisfied = all_satisfied && r.satisfied;

    if (o.format == "csv") {
        std::string text = csv_envelope(o, "verify") + report_csv_header() + "\n";
        for (const Row& r : rows) {
            text += r.body.at("name").get<std::string>() + "," +
                    fmt_double(r.body.at("lhs").get<double>()) + "," +
                    fmt_double(r.body.at("rhs").get<double>()) + "," +
                    fmt_double(r.body.at("gap").get<double>()) + "," +
                    (r.body.at("satisfied").get<bool>() ? "true" : "false") + "," +
                    fmt_double(r.body.at("tolerance").get<double>()) + "\n";
        }
        for (const Row& r : skipped)
            text += "# skipped name=" + r.name +
                    " collection=" + std::to_string(r.index) +
                    " reason=" + r.body.at("reason").get<std::string>() + "\n";
        emit(o, text);
    } else {
        json out = envelope(o, "verify");
        out["system"] = json::array();
        for (const auto& s : specs) out["system"].push_back(spec_to_json(s));
        out["collections"] = json::array();
        for (const auto& e : entries)
            out["collections"].push_back(collection_to_json(e.c));
        out["reports"] = json::array();
        for (const Row& r : rows) out["reports"].push_back(r.body);
        out["skipped"] = json::array();
        for (const Row& r : skipped) out["skipped"].push_back(r.body);
        out["all_satisfied"] = all_satisfied;
        emit(o, out.dump(2) + "\n");
    }
    return all_satisfied ? 0 : 2;
}

// ------------------------------------------------------------- clt-sweep --

int run_clt_sweep(const Options& o, bool n_max_flag_given) {
    const json in = load_input(o);
    const DistributionSpec spec =
        spec_from_json(require_field(in, "spec", "input"), "input.spec");
    double smooth_t = 0.0;
    if (in.contains("smooth_t")) smooth_t = require_number(in, "smooth_t", "input");
    int n_max = 6;
    if (in.contains("n_max"))
        n_max = static_cast<int>(require_number(in, "n_max", "input"));
    if (n_max_flag_given) n_max = o.n_max;

    const CltSweepResult sweep = iid_info_sequence(spec, n_max, smooth_t, o.grid());
    bool all_monotone = true;
    for (const CltSweepRow& row : sweep.rows)
        all_monotone = all_monotone && row.entropy_nondecreasing &&
                       row.fisher_nonincreasing;

    if (o.format == "csv") {
        std::string text = csv_envelope(o, "clt-sweep");
        text += "n,entropy,fisher,entropy_power,rel_entropy_gaussian,gap_prev\n";
        for (const CltSweepRow& row : sweep.rows)
            text += std::to_string(row.n) + "," + fmt_double(row.entropy) + "," +
                    fmt_double(row.fisher) + "," + fmt_double(row.entropy_power) +
                    "," + fmt_double(row.rel_entropy_gaussian) + "," +
                    fmt_double(row.gap_prev) + "\n";
        emit(o, text);
    } else {
        json out = envelope(o, "clt-sweep");
        out["spec"] = spec_to_json(spec);
        out["smooth_t"] = smooth_t;
        out["n_max"] = n_max;
        out["rows"] = json::array();
        for (const CltSweepRow& row : sweep.rows)
            out["rows"].push_back(
                {{"n", row.n},
                 {"entropy", row.entropy},
                 {"fisher", row.fisher},  // serialized as null when infinite
                 {"fisher_defined", row.fisher_defined},
                 {"entropy_power", row.entropy_power},
                 {"rel_entropy_gaussian", row.rel_entropy_gaussian},
                 {"variance", row.variance},
                 {"gap_prev", row.gap_prev},
                 {"entropy_nondecreasing", row.entropy_nondecreasing},
                 {"fisher_nonincreasing", row.fisher_nonincreasing}});
        out["all_monotone"] = all_monotone;
        emit(o, out.dump(2) + "\n");
    }
    return all_monotone ? 0 : 2;
}

// ------------------------------------------------------------ anova-demo --

Coordinate coordinate_from_json(const json& j, const std::string& path) {
    const json& values = require_field(j, "values", path);
    const json& probs = require_field(j, "probs", path);
    if (!values.is_array() || !probs.is_array())
        throw config_error(path + ": values/probs must be arrays");
    try {
        return Coordinate{values.get<std::vector<double>>(),
                          probs.get<std::vector<double>>()};
    } catch (const json::exception& e) {
        throw config_error(path + ": " + e.what());
    }
}

ProductSpace space_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw config_error(path + ": expected an object");
    if (j.contains("iid")) {
        const auto n = static_cast<int>(require_number(j, "n", path));
        return ProductSpace::iid(n, coordinate_from_json(j.at("iid"), path + ".iid"));
    }
    const json& coords = require_field(j, "coords", path);
    if (!coords.is_array() || coords.empty())
        throw config_error(path + ".coords: expected a nonempty array");
    std::vector<Coordinate> cs;
    for (std::size_t i = 0; i < coords.size(); ++i)
        cs.push_back(coordinate_from_json(
            coords[i], path + ".coords[" + std::to_string(i) + "]"));
    return ProductSpace::make(std::move(cs));
}

int run_anova_demo(const Options& o) {
    const json in = load_input(o);
    const ProductSpace space =
        space_from_json(require_field(in, "space", "input"), "input.space");

    if (in.contains("values") == in.contains("subtables"))
        throw config_error(
            "input: provide exactly one of 'values' (a full table) or "
            "'subtables' (with 'collection')");

    TableFunction f;
    json vd;  // variance-drop block, only for subtables mode
    bool all_satisfied = true;
    if (in.contains("values")) {
        try {
            f.values = in.at("values").get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw config_error(std::string("input.values: ") + e.what());
        }
        if (f.values.size() != space.total())
            throw config_error("input.values: expected " +
                               std::to_string(space.total()) + " entries");
    } else {
        json entry = require_field(in, "collection", "input");
        for (const char* key : {"subtables", "packing"})
            if (in.contains(key)) entry[key] = in.at(key);
        const SubsetCollection c =
            canonicalize_with_arrays(entry, "input.collection",
                                     {"subtables", "packing"});
        if (c.n != space.n())
            throw config_error("input.collection: n=" + std::to_string(c.n) +
                               " does not match the space's " +
                               std::to_string(space.n()) + " coordinates");
        std::vector<std::vector<double>> subtables;
        try {
            subtables = require_field(entry, "subtables", "input")
                            .get<std::vector<std::vector<double>>>();
        } catch (const json::exception& e) {
            throw config_error(std::string("input.subtables: ") + e.what());
        }
        const CAdditiveFunction u =
            CAdditiveFunction::from_subtables(space, c, subtables);
        f = u.sum();

        const VarianceDropResult uni = variance_drop_bound(u, space);
        vd["uniform"] = {{"lhs", uni.lhs},
                         {"rhs", uni.rhs},
                         {"satisfied", uni.lhs <= uni.rhs + 1e-12}};
        FractionalPacking beta;
        if (entry.contains("packing")) {
            try {
                beta.beta = entry.at("packing").get<std::vector<double>>();
            } catch (const json::exception& e) {
                throw config_error(std::string("input.packing: ") + e.what());
            }
        } else {
            beta = natural_packing(c);
        }
        const VarianceDropResult packed = variance_drop_bound(u, space, beta);
        vd["packing"] = {{"beta", beta.beta},
                         {"lhs", packed.lhs},
                         {"rhs", packed.rhs},
                         {"satisfied", packed.lhs <= packed.rhs + 1e-12}};
        all_satisfied = vd["uniform"]["satisfied"].get<bool>() &&
                        vd["packing"]["satisfied"].get<bool>();
    }

    const AnovaDecomposition dec = anova_decompose(f, space);
    const int n = space.n();
    struct TableRow {
        std::vector<int> subset;
        double variance;
    };
    std::vector<TableRow> table;
    for (std::size_t mask = 0; mask < dec.components.size(); ++mask) {
        std::vector<int> subset;
        for (int j = 1; j <= n; ++j)
            if (mask & (std::size_t{1} << (j - 1))) subset.push_back(j);
        table.push_back({std::move(subset),
                         table_variance(dec.components[mask], space)});
    }
    std::sort(table.begin(), table.end(), [](const TableRow& a, const TableRow& b) {
        if (a.subset.size() != b.subset.size())
            return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });

    // Exactness diagnostics: reconstruction residual and worst pairwise
    // component correlation.
    TableFunction recon;
    recon.values.assign(space.total(), 0.0);
    for (const TableFunction& comp : dec.components)
        for (std::size_t i = 0; i < recon.values.size(); ++i)
            recon.values[i] += comp.values[i];
    double recon_err = 0.0;
    for (std::size_t i = 0; i < recon.values.size(); ++i)
        recon_err = std::max(recon_err, std::abs(recon.values[i] - f.values[i]));
    double max_inner = 0.0;
    for (std::size_t a = 0; a < dec.components.size(); ++a)
        for (std::size_t b = a + 1; b < dec.components.size(); ++b)
            max_inner = std::max(
                max_inner,
                std::abs(table_inner(dec.components[a], dec.components[b], space)));

    if (o.format == "csv") {
        std::string text = csv_envelope(o, "anova-demo") + "subset,variance\n";
        for (const TableRow& r : table)
            text += (r.subset.empty() ? std::string("mean") : join_set(r.subset)) +
                    "," + fmt_double(r.variance) + "\n";
        text += "# total_variance=" + fmt_double(table_variance(f, space)) +
                " reconstruction_error=" + fmt_double(recon_err) +
                " max_pairwise_inner=" + fmt_double(max_inner) + "\n";
        if (!vd.is_null())
            text += "# variance_drop uniform lhs=" +
                    fmt_double(vd["uniform"]["lhs"].get<double>()) +
                    " rhs=" + fmt_double(vd["uniform"]["rhs"].get<double>()) +
                    " | packing lhs=" + fmt_double(vd["packing"]["lhs"].get<double>()) +
                    " rhs=" + fmt_double(vd["packing"]["rhs"].get<double>()) + "\n";
        emit(o, text);
    } else {
        json out = envelope(o, "anova-demo");
        json sizes = json::array();
        for (int j = 0; j < n; ++j) sizes.push_back(space.size(j));
        out["space_sizes"] = std::move(sizes);
        out["anova_table"] = json::array();
        for (const TableRow& r : table)
            out["anova_table"].push_back(
                {{"subset", r.subset}, {"variance", r.variance}});
        out["total_variance"] = table_variance(f, space);
        out["reconstruction_error"] = recon_err;
        out["max_pairwise_inner"] = max_inner;
        if (!vd.is_null()) out["variance_drop"] = vd;
        out["all_satisfied"] = all_satisfied;
        emit(o, out.dump(2) + "\n");
    }
    return all_satisfied ? 0 : 2;
}

// ---------------------------------------------------------- pack-optimize --

int run_pack_optimize(const Options& o) {
    const json in = load_input(o);
    json entry = require_field(in, "collection", "input");
    if (in.contains("objective")) entry["objective"] = in.at("objective");
    const SubsetCollection c =
        canonicalize_with_arrays(entry, "input.collection", {"objective"});

    std::vector<double> objective(c.sets.size(), 1.0);
    if (entry.contains("objective")) {
        try {
            objective = entry.at("objective").get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw config_error(std::string("input.objective: ") + e.what());
        }
    }

    const FractionalPacking opt = optimize_packing_lp(c, objective);
    const FractionalPacking nat = natural_packing(c);
    const FractionalPacking uni = uniform_packing(c);
    const auto value = [&](const FractionalPacking& p) {
        double v = 0.0;
        for (std::size_t i = 0; i < p.beta.size(); ++i)
            v += objective[i] * p.beta[i];
        return v;
    };
    const Classification cls = classify(c);
    const Multiplicities mult = multiplicities(c);

    if (o.format == "csv") {
        std::string text =
            csv_envelope(o, "pack-optimize") + "set,beta_optimal,beta_natural,beta_uniform\n";
        for (std::size_t i = 0; i < c.sets.size(); ++i)
            text += join_set(c.sets[i]) + "," + fmt_double(opt.beta[i]) + "," +
                    fmt_double(nat.beta[i]) + "," + fmt_double(uni.beta[i]) + "\n";
        text += "# objective_optimal=" + fmt_double(value(opt)) +
                " objective_natural=" + fmt_double(value(nat)) +
                " objective_uniform=" + fmt_double(value(uni)) +
                " r=" + std::to_string(mult.r) +
                " balanced=" + (cls.balanced ? "true" : "false") + "\n";
        emit(o, text);
    } else {
        json out = envelope(o, "pack-optimize");
        out["collection"] = collection_to_json(c);
        out["classification"] = {{"balanced", cls.balanced},
                                 {"discriminating", cls.discriminating},
                                 {"quasibalanced", cls.quasibalanced}};
        out["multiplicities"] = {
            {"r", mult.r}, {"r_index", mult.r_index}, {"r_set", mult.r_set}};
        out["objective"] = objective;
        out["optimal"] = {{"beta", opt.beta}, {"value", value(opt)}};
        out["natural"] = {{"beta", nat.beta}, {"value", value(nat)}};
        out["uniform"] = {{"beta", uni.beta}, {"value", value(uni)}};
        emit(o, out.dump(2) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------ score-check --

int run_score_check(const Options& o) {
    const json in = load_input(o);
    const json& pairs = require_field(in, "pairs", "input");
    if (!pairs.is_array() || pairs.empty())
        throw config_error("input.pairs: expected a nonempty array");
    double threshold = 5e-3;
    if (in.contains("threshold")) threshold = require_number(in, "threshold", "input");

    json results = json::array();
    json skipped = json::array();
    bool all_satisfied = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string path = "input.pairs[" + std::to_string(i) + "]";
        const DistributionSpec a =
            spec_from_json(require_field(pairs[i], "a", path), path + ".a");
        const DistributionSpec b =
            spec_from_json(require_field(pairs[i], "b", path), path + ".b");
        GridDensity fa = build_density(a, o.grid());
        GridDensity fb = build_density(b, o.grid());
        if (pairs[i].contains("smooth_a")) {
            const double t = require_number(pairs[i], "smooth_a", path);
            if (t > 0.0) fa = heat_perturb(fa, t);
        }
        if (pairs[i].contains("smooth_b")) {
            const double t = require_number(pairs[i], "smooth_b", path);
            if (t > 0.0) fb = heat_perturb(fb, t);
        }
        try {
            const double residual = score_convolution_check(fa, fb);
            const bool ok = residual <= threshold;
            all_satisfied = all_satisfied && ok;
            results.push_back({{"index", i},
                               {"a", spec_to_json(a)},
                               {"b", spec_to_json(b)},
                               {"residual", residual},
                               {"satisfied", ok}});
        } catch (const score_undefined_error& e) {
            skipped.push_back({{"index", i}, {"reason", e.what()}});
        }
    }

    if (o.format == "csv") {
        std::string text = csv_envelope(o, "score-check") + "pair,residual,satisfied\n";
        for (const json& r : results)
            text += std::to_string(r.at("index").get<std::size_t>()) + "," +
                    fmt_double(r.at("residual").get<double>()) + "," +
                    (r.at("satisfied").get<bool>() ? "true" : "false") + "\n";
        for (const json& s : skipped)
            text += "# skipped pair=" + std::to_string(s.at("index").get<std::size_t>()) +
                    " reason=" + s.at("reason").get<std::string>() + "\n";
        emit(o, text);
    } else {
        json out = envelope(o, "score-check");
        out["threshold"] = threshold;
        out["pairs"] = results;
        out["skipped"] = skipped;
        out["all_satisfied"] = all_satisfied;
        emit(o, out.dump(2) + "\n");
    }
    return all_satisfied ? 0 : 2;
}

void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.input, "input JSON file")->required();
    cmd->add_option("--output", o.output, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--grid-points", o.grid_points,
                    "grid size (power of two >= 1024)");
    cmd->add_option("--grid-sigmas", o.grid_sigmas,
                    "grid half width in standard deviations");
    cmd->add_option("--tol", o.tol_rel, "relative tolerance component");
    cmd->add_option("--tol-abs", o.tol_abs, "absolute tolerance component");
    cmd->add_option("--seed", o.seed, "seed recorded in artifacts");
    cmd->add_option("--n-max", o.n_max, "sweep length override (clt-sweep)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"information functionals of sums of independent variables"};
    app.require_subcommand(1);
    Options o;

    CLI::App* verify = app.add_subcommand(
        "verify", "evaluate inequality checks for a system + collections");
    CLI::App* sweep = app.add_subcommand(
        "clt-sweep", "entropy/Fisher sequence of standardized i.i.d. sums");
    CLI::App* anova = app.add_subcommand(
        "anova-demo", "ANOVA component variance table for a tabulated function");
    CLI::App* pack = app.add_subcommand(
        "pack-optimize", "LP-optimal fractional packing for a collection");
    CLI::App* score = app.add_subcommand(
        "score-check", "score-convolution identity residuals for density pairs");
    for (CLI::App* cmd : {verify, sweep, anova, pack, score})
        add_common_options(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return run_verify(o);
        if (sweep->parsed())
            return run_clt_sweep(o, sweep->count("--n-max") > 0);
        if (anova->parsed()) return run_anova_demo(o);
        if (pack->parsed()) return run_pack_optimize(o);
        return run_score_check(o);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
