#pragma once

#include <string>

#include <json.hpp>

#include "isetlab/constructions.hpp"
#include "isetlab/counting.hpp"
#include "isetlab/family.hpp"
#include "isetlab/harness.hpp"
#include "isetlab/threshold.hpp"
#include "isetlab/transversal.hpp"

namespace isetlab {

inline constexpr int kSchemaVersion = 1;

/// {"universe": n, "sets": [[1,2], ...]} with sets in canonical order.
nlohmann::json family_to_json(const Family& fam);

/// Accepts the object form above, or a bare array of arrays (universe taken
/// as the largest element). Throws ParameterError on malformed input.
Family family_from_json(const nlohmann::json& j);
Family read_family_file(const std::string& path);

nlohmann::json kind_to_json(const FamilyKind& kind);
nlohmann::json profile_to_json(const GeneratorProfile& profile);
nlohmann::json audit_to_json(const AuditRecord& rec);
nlohmann::json report_to_json(const ExtremalReport& report);
nlohmann::json verdict_to_json(const ThresholdVerdict& v);

}  // namespace isetlab
