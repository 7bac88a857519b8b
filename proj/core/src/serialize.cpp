#include "avq/serialize.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace avq {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ALLOWED_CLASSICAL:
      return "ALLOWED_CLASSICAL";
    case Verdict::ELIMINATED_BY_COUNTING:
      return "ELIMINATED_BY_COUNTING";
    case Verdict::ELIMINATED_BY_RULES:
      return "ELIMINATED_BY_RULES";
    case Verdict::UNRESOLVED:
      return "UNRESOLVED";
  }
  throw std::invalid_argument("verdict_name: unknown verdict");
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "ALLOWED_CLASSICAL") return Verdict::ALLOWED_CLASSICAL;
  if (name == "ELIMINATED_BY_COUNTING") return Verdict::ELIMINATED_BY_COUNTING;
  if (name == "ELIMINATED_BY_RULES") return Verdict::ELIMINATED_BY_RULES;
  if (name == "UNRESOLVED") return Verdict::UNRESOLVED;
  throw std::invalid_argument("verdict_from_name: " + name);
}

std::string rule_id_name(RuleId id) {
  switch (id) {
    case RuleId::R1_IYER_ONES_N:
      return "R1_IYER_ONES_N";
    case RuleId::R2_IYER_124:
      return "R2_IYER_124";
    case RuleId::R3_LAZARSFELD_17:
      return "R3_LAZARSFELD_17";
  }
  throw std::invalid_argument("rule_id_name: unknown rule");
}

RuleId rule_id_from_name(const std::string& name) {
  if (name == "R1_IYER_ONES_N") return RuleId::R1_IYER_ONES_N;
  if (name == "R2_IYER_124") return RuleId::R2_IYER_124;
  if (name == "R3_LAZARSFELD_17") return RuleId::R3_LAZARSFELD_17;
  throw std::invalid_argument("rule_id_from_name: " + name);
}

std::string type_status_name(TypeStatus s) {
  switch (s) {
    case TypeStatus::Eliminated:
      return "eliminated";
    case TypeStatus::PaperOmitted:
      return "paper_omitted";
    case TypeStatus::Open:
      return "open";
  }
  throw std::invalid_argument("type_status_name: unknown status");
}

TypeStatus type_status_from_name(const std::string& name) {
  if (name == "eliminated") return TypeStatus::Eliminated;
  if (name == "paper_omitted") return TypeStatus::PaperOmitted;
  if (name == "open") return TypeStatus::Open;
  throw std::invalid_argument("type_status_from_name: " + name);
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json pair_to_json(const IntPair& p) {
  return ordered_json::array({to_decimal(p.first), to_decimal(p.second)});
}

IntPair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("pair_from_json: expected a 2-array");
  }
  return {parse_int(j[0].get<std::string>()),
          parse_int(j[1].get<std::string>())};
}

ordered_json parts_to_json(const PolarizationType& t) {
  ordered_json arr = ordered_json::array();
  for (const Int& p : t.parts) {
    arr.push_back(to_decimal(p));
  }
  return arr;
}

PolarizationType parts_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("parts_from_json: expected a nonempty array");
  }
  std::vector<Int> parts;
  parts.reserve(j.size());
  for (const auto& e : j) {
    parts.push_back(parse_int(e.get<std::string>()));
  }
  return PolarizationType(std::move(parts));
}

ordered_json assessment_to_json(const TypeAssessment& a) {
  ordered_json out;
  out["type"] = parts_to_json(a.type);
  out["status"] = type_status_name(a.status);
  if (a.rule) {
    out["rule"] = rule_id_name(*a.rule);
  }
  if (!a.note.empty()) {
    out["note"] = a.note;
  }
  return out;
}

TypeAssessment assessment_from_json(const json& j) {
  TypeAssessment a{parts_from_json(j.at("type"))};
  a.status = type_status_from_name(j.at("status").get<std::string>());
  if (j.contains("rule")) {
    a.rule = rule_id_from_name(j.at("rule").get<std::string>());
  }
  if (j.contains("note")) {
    a.note = j.at("note").get<std::string>();
  }
  return a;
}

ordered_json candidate_to_json(const Candidate& c) {
  ordered_json out;
  out["pair"] = pair_to_json(c.pair);
  out["degree"] = to_decimal(c.degree);
  out["h0"] = to_decimal(c.h0);
  ordered_json types = ordered_json::array();
  for (const auto& a : c.types) {
    types.push_back(assessment_to_json(a));
  }
  out["types"] = std::move(types);
  return out;
}

Candidate candidate_from_json(const json& j) {
  Candidate c;
  c.pair = pair_from_json(j.at("pair"));
  c.degree = parse_int(j.at("degree").get<std::string>());
  c.h0 = parse_int(j.at("h0").get<std::string>());
  for (const auto& e : j.at("types")) {
    c.types.push_back(assessment_from_json(e));
  }
  return c;
}

ordered_json application_to_json(const RuleApplication& a) {
  ordered_json out;
  out["rule"] = rule_id_name(a.rule_id);
  out["citation"] = a.citation;
  out["subject"] = parts_to_json(a.subject);
  out["conclusion"] = a.conclusion;
  return out;
}

RuleApplication application_from_json(const json& j) {
  return RuleApplication{rule_id_from_name(j.at("rule").get<std::string>()),
                         j.at("citation").get<std::string>(),
                         parts_from_json(j.at("subject")),
                         j.at("conclusion").get<std::string>()};
}

}  // namespace

nlohmann::ordered_json record_to_json(const EliminationRecord& rec) {
  ordered_json out;
  out["d"] = rec.d;
  out["f_d"] = to_decimal(rec.f_d);
  ordered_json all = ordered_json::array();
  for (const auto& p : rec.all_solutions) {
    all.push_back(pair_to_json(p));
  }
  out["all_solutions"] = std::move(all);
  out["solutions_complete"] = rec.solutions_complete;
  ordered_json eff = ordered_json::array();
  for (const auto& p : rec.effective_solutions) {
    eff.push_back(pair_to_json(p));
  }
  out["effective_solutions"] = std::move(eff);
  out["max_degree"] = to_decimal(rec.max_degree);
  out["min_degree"] = to_decimal(rec.min_degree);
  out["min_degree_applies"] = rec.min_degree_applies;
  ordered_json cands = ordered_json::array();
  for (const auto& c : rec.surviving_candidates) {
    cands.push_back(candidate_to_json(c));
  }
  out["surviving_candidates"] = std::move(cands);
  ordered_json rules = ordered_json::array();
  for (const auto& a : rec.rules_applied) {
    rules.push_back(application_to_json(a));
  }
  out["rules_applied"] = std::move(rules);
  out["verdict"] = verdict_name(rec.verdict);
  return out;
}

EliminationRecord record_from_json(const nlohmann::json& j) {
  try {
    EliminationRecord rec;
    rec.d = j.at("d").get<int>();
    rec.f_d = parse_int(j.at("f_d").get<std::string>());
    for (const auto& e : j.at("all_solutions")) {
      rec.all_solutions.push_back(pair_from_json(e));
    }
    rec.solutions_complete = j.at("solutions_complete").get<bool>();
    for (const auto& e : j.at("effective_solutions")) {
      rec.effective_solutions.push_back(pair_from_json(e));
    }
    rec.max_degree = parse_int(j.at("max_degree").get<std::string>());
    rec.min_degree = parse_int(j.at("min_degree").get<std::string>());
    rec.min_degree_applies = j.at("min_degree_applies").get<bool>();
    for (const auto& e : j.at("surviving_candidates")) {
      rec.surviving_candidates.push_back(candidate_from_json(e));
    }
    for (const auto& e : j.at("rules_applied")) {
      rec.rules_applied.push_back(application_from_json(e));
    }
    rec.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("record_from_json: ") + e.what());
  }
}

}  // namespace avq
