#pragma once

#include <json.hpp>

#include "mstd/report.hpp"
#include "mstd/setcore.hpp"

// JSON renderings. Objects keep insertion order so output is byte-stable;
// every number is an exact integer.
namespace mstd {

using Json = nlohmann::ordered_json;

Json to_json(const APSpec& ap);
Json to_json(const SetProfile& p);

/// `with_timing = false` drops the wall-clock field so reports can be
/// compared byte for byte across runs.
Json to_json(const VerificationReport& r, bool with_timing = true);

/// Two-space indented dump.
std::string dump(const Json& j);

}  // namespace mstd
