#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "finsler/identities/registry.hpp"

namespace finsler::identities {

nlohmann::ordered_json to_json(const IdentityReport& r, bool timing = false);
nlohmann::ordered_json to_json(const IdentitySummary& s);
nlohmann::ordered_json to_json(const IdentityDescriptor& d);
/// JSON array of per-point records. Elapsed times are left out unless
/// `timing` is set, so repeated runs serialize identically.
nlohmann::ordered_json records_json(const std::vector<IdentityReport>& records, bool timing = false);
/// id,worst_relative,verdict
std::string summary_csv(const std::vector<IdentitySummary>& summaries);

}  // namespace finsler::identities
