#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "avq/feasibility.hpp"

namespace avq {

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

std::string rule_id_name(RuleId id);
RuleId rule_id_from_name(const std::string& name);

std::string type_status_name(TypeStatus s);
TypeStatus type_status_from_name(const std::string& name);

/// JSON form of an elimination record. Field names and ordering follow the
/// record declaration; every big integer is rendered as a full decimal
/// string so that values like 18! survive exactly.
nlohmann::ordered_json record_to_json(const EliminationRecord& rec);

/// Inverse of record_to_json. Throws std::invalid_argument on malformed
/// input. record_from_json(record_to_json(r)) == r for every record.
EliminationRecord record_from_json(const nlohmann::json& j);

}  // namespace avq
