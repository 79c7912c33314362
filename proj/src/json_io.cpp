#include "infosum/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace infosum {

using nlohmann::json;

const json& require_field(const json& j, const std::string& key,
                          const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw config_error(path + "." + key + ": required field missing");
    return j.at(key);
}

double require_number(const json& j, const std::string& key,
                      const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number())
        throw config_error(path + "." + key + ": expected a number, got " +
                           std::string(v.type_name()));
    return v.get<double>();
}

DistributionSpec spec_from_json(const json& j, const std::string& path) {
    if (!j.is_object())
        throw config_error(path + ": expected an object describing a distribution");
    const json& fam = require_field(j, "family", path);
    if (!fam.is_string())
        throw config_error(path + ".family: expected a string");
    const std::string family = fam.get<std::string>();
    // Field extraction raises path-tagged errors itself; factory validation
    // failures get the path folded in here.
    const auto validated = [&](auto&& make) -> DistributionSpec {
        try {
            return make();
        } catch (const config_error& e) {
            throw config_error(path + ": " + e.what());
        }
    };
    try {
        if (family == "gaussian") {
            const double mean = require_number(j, "mean", path);
            const double var = require_number(j, "variance", path);
            return validated([&] { return DistributionSpec::gaussian(mean, var); });
        }
        if (family == "uniform") {
            const double a = require_number(j, "a", path);
            const double b = require_number(j, "b", path);
            return validated([&] { return DistributionSpec::uniform(a, b); });
        }
        if (family == "gaussian_mixture") {
            const json& comps = require_field(j, "components", path);
            if (!comps.is_array() || comps.empty())
                throw config_error(path +
                                   ".components: expected a nonempty array");
            std::vector<MixtureComponent> out;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                const std::string cp =
                    path + ".components[" + std::to_string(i) + "]";
                out.push_back({require_number(comps[i], "weight", cp),
                               require_number(comps[i], "mean", cp),
                               require_number(comps[i], "variance", cp)});
            }
            return validated(
                [&] { return DistributionSpec::mixture(std::move(out)); });
        }
        if (family == "tabulated") {
            const json& vals = require_field(j, "values", path);
            if (!vals.is_array())
                throw config_error(path + ".values: expected an array");
            const double x0 = require_number(j, "x0", path);
            const double dx = require_number(j, "dx", path);
            auto values = vals.get<std::vector<double>>();
            return validated([&] {
                return DistributionSpec::tabulated(x0, dx, std::move(values));
            });
        }
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error(path + ": " + e.what());
    }
    throw config_error(path + ".family: unknown family '" + family + "'");
}

json spec_to_json(const DistributionSpec& spec) {
    json j;
    j["family"] = spec.family;
    if (spec.family == "gaussian") {
        j["mean"] = spec.mean;
        j["variance"] = spec.variance;
    } else if (spec.family == "uniform") {
        j["a"] = spec.a;
        j["b"] = spec.b;
    } else if (spec.family == "gaussian_mixture") {
        json comps = json::array();
        for (const auto& c : spec.components)
            comps.push_back({{"weight", c.weight},
                             {"mean", c.mean},
                             {"variance", c.variance}});
        j["components"] = std::move(comps);
    } else {
        j["x0"] = spec.x0;
        j["dx"] = spec.dx;
        j["values"] = spec.values;
    }
    return j;
}

SubsetCollection collection_from_json(const json& j, const std::string& path) {
    if (!j.is_object())
        throw config_error(path + ": expected an object describing a collection");
    try {
        if (j.contains("standard")) {
            const json& kind = j.at("standard");
            if (!kind.is_string())
                throw config_error(path + ".standard: expected a string");
            const auto n = static_cast<int>(require_number(j, "n", path));
            int param = 0;
            if (j.contains("m")) param = static_cast<int>(require_number(j, "m", path));
            if (j.contains("k")) param = static_cast<int>(require_number(j, "k", path));
            return standard_collection(kind.get<std::string>(), n, param);
        }
        const auto n = static_cast<int>(require_number(j, "n", path));
        const json& sets = require_field(j, "sets", path);
        if (!sets.is_array() || sets.empty())
            throw config_error(path + ".sets: expected a nonempty array of arrays");
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!sets[i].is_array())
                throw config_error(path + ".sets[" + std::to_string(i) +
                                   "]: expected an array of indices");
            out.push_back(sets[i].get<std::vector<int>>());
        }
        return SubsetCollection::make(n, std::move(out));
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error(path + ": " + e.what());
    }
}

json collection_to_json(const SubsetCollection& c) {
    return json{{"n", c.n}, {"sets", c.sets}};
}

json info_summary_to_json(const InfoSummary& s) {
    return json{{"entropy", s.entropy},
                {"fisher", s.fisher},
                {"entropy_power", s.entropy_power},
                {"rel_entropy_gaussian", s.rel_entropy_gaussian},
                {"variance", s.variance}};
}

json report_to_json(const InequalityReport& r) {
    return json{{"name", r.name},         {"equation", r.equation},
                {"lhs", r.lhs},           {"rhs", r.rhs},
                {"gap", r.gap},           {"satisfied", r.satisfied},
                {"tolerance", r.tolerance}, {"metadata", r.metadata}};
}

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string report_csv_header() {
    return "name,lhs,rhs,gap,satisfied,tolerance";
}

std::string report_csv_row(const InequalityReport& r) {
    return r.name + "," + fmt_double(r.lhs) + "," + fmt_double(r.rhs) + "," +
           fmt_double(r.gap) + "," + (r.satisfied ? "true" : "false") + "," +
           fmt_double(r.tolerance);
}

}  // namespace infosum
