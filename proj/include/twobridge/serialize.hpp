// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV forms of the library's records. Fractions are strings
// "p/q"; areas and counts are strings "n/2" and "m/4" so they stay exact.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twobridge/casson_gordon.hpp"
#include "twobridge/enumeration.hpp"
#include "twobridge/families.hpp"

namespace twobridge {

using Json = nlohmann::ordered_json;

/// "23", "23.25", "23.5", "23.75"
std::string format_quarters(Int quarters);
/// "23", "11.5"
std::string format_halves(Int halves);

Json to_json(const SigmaTerm& term);
Json to_json(const SigmaReport& report);
Json to_json(const LemmaMatch& match);
Json to_json(const FamilyMembership& membership);
Json to_json(const TableRow& row);
Json to_json(const std::vector<TableRow>& rows);
Json to_json(const CrosscheckRow& row);

/// Checkpoint form: {"p","q_tested","cg_passing","non_family"}.
Json to_json(const ScanRecord& record);
/// Inverse of to_json(ScanRecord); throws DomainError on schema mismatch.
ScanRecord scan_record_from_json(const Json& j);

/// One line per record, no trailing newline.
std::string checkpoint_line(const ScanRecord& record);

/// Header "crossing,family0,family1,family2,total" plus one line per row.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace twobridge
