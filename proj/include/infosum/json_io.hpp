#pragma once

#include <json.hpp>
#include <string>

#include "infosum/distributions.hpp"
#include "infosum/inequality_verifiers.hpp"
#include "infosum/subset_collections.hpp"

namespace infosum {

// Parsers throw config_error with the offending JSON path in the message.
DistributionSpec spec_from_json(const nlohmann::json& j,
                                const std::string& path);
nlohmann::json spec_to_json(const DistributionSpec& spec);

SubsetCollection collection_from_json(const nlohmann::json& j,
                                      const std::string& path);
nlohmann::json collection_to_json(const SubsetCollection& c);

nlohmann::json info_summary_to_json(const InfoSummary& s);
nlohmann::json report_to_json(const InequalityReport& r);

// Fixed "%.12g" rendering; non-finite values print as inf/-inf/nan.
std::string fmt_double(double v);

std::string report_csv_header();
std::string report_csv_row(const InequalityReport& r);

// Field accessors that raise config_error with a JSON path on bad input.
const nlohmann::json& require_field(const nlohmann::json& j,
                                    const std::string& key,
                                    const std::string& path);
double require_number(const nlohmann::json& j, const std::string& key,
                      const std::string& path);

}  // namespace infosum
