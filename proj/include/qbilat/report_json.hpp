#pragma once

#include <string>

#include <json.hpp>

#include "qbilat/catalog.hpp"
#include "qbilat/harness.hpp"

namespace qbilat {

// Sorted keys, no whitespace, floats with 17 significant digits, integers as
// integers, non-finite numbers as null. Parsing the output and writing it again
// reproduces it byte for byte.
std::string canonical_dump(const nlohmann::json& j);

// Complex numbers are written as [re, im].
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const ParamSet& p);
ParamSet params_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Registry entries as printed by `list --json`.
nlohmann::json record_to_json(const IdentityRecord& rec);

}  // namespace qbilat
