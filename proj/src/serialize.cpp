#include "isetlab/serialize.hpp"

#include <fstream>
#include <sstream>

#include "isetlab/error.hpp"

namespace isetlab {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json family_to_json(const Family& fam) { return json{{"universe", fam.universe_size()}, {"sets", fam.to_lists()}}; }

Family family_from_json(const json& j) {
  try {
    const json* sets = &j;
    int universe = 0;
    if (j.is_object()) {
      if (!j.contains("sets") || !j.contains("universe")) {
        throw ParameterError("family object needs \"universe\" and \"sets\"");
      }
      sets = &j.at("sets");
      universe = j.at("universe").get<int>();
    }
    if (!sets->is_array()) throw ParameterError("family sets must be an array of arrays");
    std::vector<std::vector<int>> lists;
    int largest = 0;
    for (const json& s : *sets) {
      if (!s.is_array()) throw ParameterError("family member must be an array of integers");
      std::vector<int> members;
      for (const json& e : s) {
        if (!e.is_number_integer()) throw ParameterError("family elements must be integers");
        members.push_back(e.get<int>());
        largest = std::max(largest, members.back());
      }
      lists.push_back(std::move(members));
    }
    if (!j.is_object()) universe = std::max(largest, 1);
    if (universe < 1) throw ParameterError("family universe must be at least 1");
    return Family::from_lists(universe, lists);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed family JSON: ") + e.what());
  }
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open family file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError("family file '" + path + "' is not valid JSON: " + e.what());
  }
  return family_from_json(j);
}

json kind_to_json(const FamilyKind& kind) {
  json j{{"kind", kind_name(kind)}};
  if (const auto* s = std::get_if<SunflowerKind>(&kind)) j["core"] = s->core.elements();
  if (const auto* tr = std::get_if<TriangleKind>(&kind)) j["ground"] = tr->ground.elements();
  return j;
}

json profile_to_json(const GeneratorProfile& profile) {
  json levels = json::object();
  for (const auto& [l, fam] : profile.levels) levels[std::to_string(l)] = fam.to_lists();
  return json{{"generators", family_to_json(profile.generators)},
              {"s", profile.s},
              {"tau", optional_json(profile.tau)},
              {"levels", levels},
              {"alpha", optional_json(profile.alpha)}};
}

json audit_to_json(const AuditRecord& rec) {
  return json{{"family_id", rec.family_id},
              {"n", rec.n},
              {"k", rec.k},
              {"t", rec.t},
              {"family_size", rec.family_size},
              {"intersections", rec.intersections},
              {"lemma21_antichain", rec.lemma21_antichain},
              {"lemma21_upclosure", rec.lemma21_upclosure},
              {"lemma21_nosunflower", rec.lemma21_nosunflower},
              {"s", rec.s},
              {"tau", optional_json(rec.tau)},
              {"alpha", optional_json(rec.alpha)},
              {"complete_sunflower", rec.complete_sunflower},
              {"hypotheses_met", rec.hypotheses_met},
              {"eq1_ok", optional_json(rec.eq1_ok)},
              {"eq4_ok", optional_json(rec.eq4_ok)},
              {"eq5_ok", optional_json(rec.eq5_ok)},
              {"eq6_alpha_ok", optional_json(rec.eq6_alpha_ok)},
              {"eq6_relaxed_ok", optional_json(rec.eq6_relaxed_ok)},
              {"eq7_ok", optional_json(rec.eq7_ok)},
              {"layer_cover_ok", rec.layer_cover_ok},
              {"classification", rec.classification ? kind_to_json(*rec.classification) : json(nullptr)},
              {"all_ok", rec.all_ok()}};
}

json report_to_json(const ExtremalReport& report) {
  json argmax = json::array();
  for (const Family& f : report.argmax_families) argmax.push_back(f.to_lists());
  json audits = json::array();
  for (const AuditRecord& a : report.audits) audits.push_back(audit_to_json(a));
  return json{{"n", report.n},
              {"k", report.k},
              {"t", report.t},
              {"num_maximal", report.num_maximal},
              {"max_I", report.max_I},
              {"num_argmax", report.num_argmax},
              {"argmax_families", argmax},
              {"count_I_At", report.count_I_At ? json(report.count_I_At->to_string()) : json(nullptr)},
              {"at_is_max", optional_json(report.at_is_max)},
              {"kinds", report.kinds},
              {"audits", audits}};
}

json verdict_to_json(const ThresholdVerdict& v) {
  return json{{"n", v.n}, {"k", v.k}, {"t", v.t}, {"lhs", v.lhs.to_string()}, {"rhs", v.rhs.to_string()}, {"holds", v.holds}};
}

}  // namespace isetlab
