// SPDX-License-Identifier: Apache-2.0
#include "twobridge/serialize.hpp"

#include <sstream>

namespace twobridge {

std::string format_quarters(Int quarters) {
  static constexpr const char* kFrac[] = {"", ".25", ".5", ".75"};
  const Int whole = quarters / 4;
  const Int part = quarters % 4;
  if (quarters < 0 && part != 0) {
    return "-" + format_quarters(-quarters);
  }
  return std::to_string(whole) + kFrac[part];
}

std::string format_halves(Int halves) { return format_quarters(halves * 2); }

Json to_json(const SigmaTerm& term) {
  return Json{{"r", term.r},
              {"area", std::to_string(term.area_halves) + "/2"},
              {"int", std::to_string(term.count.quarters) + "/4"},
              {"sigma", term.sigma}};
}

Json to_json(const SigmaReport& report) {
  Json terms = Json::array();
  for (const auto& t : report.terms) terms.push_back(to_json(t));
  return Json{{"p", report.p},
              {"q", report.q},
              {"passes", report.passes},
              {"first_failure", report.first_failure ? Json(*report.first_failure) : Json(nullptr)},
              {"terms", std::move(terms)}};
}

Json to_json(const LemmaMatch& match) {
  return Json{{"id", condition_label(match.condition)},
              {"sign", match.sign > 0 ? "+" : "-"},
              {"n", match.n},
              {"d", match.d ? Json(*match.d) : Json(nullptr)}};
}

Json to_json(const FamilyMembership& m) {
  Json families = Json::array();
  for (FamilyId f : m.generator_families) families.push_back(family_label(f));
  Json conditions = Json::array();
  for (const auto& t : m.lemma_matches) {
    Json c = to_json(t.match);
    c["q"] = t.representative;
    conditions.push_back(std::move(c));
  }
  return Json{{"p", m.p},
              {"q", m.q},
              {"member", m.member},
              {"families", std::move(families)},
              {"conditions", std::move(conditions)},
              {"partial", m.partial ? Json(m.partial->canonical.str()) : Json(nullptr)}};
}

Json to_json(const TableRow& row) {
  return Json{{"crossing", row.crossing},
              {"family0", row.family0},
              {"family1", row.family1},
              {"family2", row.family2},
              {"total", row.total}};
}

Json to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const CrosscheckRow& row) {
  return Json{{"crossing", row.crossing},
              {"amphicheiral", row.amphicheiral},
              {"family0_at_plus_two", row.family0_at_plus_two},
              {"equal", row.equal}};
}

Json to_json(const ScanRecord& record) {
  return Json{{"p", record.p},
              {"q_tested", record.q_tested},
              {"cg_passing", record.cg_passing},
              {"non_family", record.non_family}};
}

ScanRecord scan_record_from_json(const Json& j) {
  try {
    ScanRecord r;
    r.p = j.at("p").get<Int>();
    r.q_tested = j.at("q_tested").get<Int>();
    r.cg_passing = j.at("cg_passing").get<std::vector<Int>>();
    r.non_family = j.at("non_family").get<std::vector<Int>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed scan record: ") + e.what());
  }
}

std::string checkpoint_line(const ScanRecord& record) { return to_json(record).dump(); }

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "crossing,family0,family1,family2,total\n";
  for (const auto& r : rows) {
    out << r.crossing << ',' << r.family0 << ',' << r.family1 << ',' << r.family2 << ','
        << r.total << '\n';
  }
  return out.str();
}

}  // namespace twobridge
