#pragma once

#include "sb/analytics.hpp"
#include "sb/equivalence.hpp"
#include "sb/locate.hpp"
#include "sb/tree.hpp"

#include <json.hpp>

#include <string>

namespace sb {

// Integers that fit in 64 bits serialize as JSON numbers, wider ones as
// decimal strings.
nlohmann::json int_to_json(const Int& value);

// {"depth": i, "entries": ["0/1", ...], "reductions": [g, ...]}
nlohmann::json row_to_json(const Row& row);
Row row_from_json(const nlohmann::json& j);

// CSV lines "depth,index,num,den", one per entry, no header.
std::string row_to_csv(const Row& row);

// Space-separated fractions, matching the printed row layout.
std::string row_to_text(const Row& row);

nlohmann::json locate_result_to_json(const LocateResult& result);

// {"D": n, "V": n, "cases": [{"prime_power": "3^1", "case": "CASE1", "residue": 1}]}
nlohmann::json canonical_seed_to_json(const CanonicalSeed& canonical);

nlohmann::json equivalence_report_to_json(const EquivalenceReport& report);

// CSV lines "depth,pair_index,determinant".
std::string det_list_to_csv(const DetList& dets);
nlohmann::json det_list_to_json(const DetList& dets);

nlohmann::json sweep_report_to_json(const SweepReport& report);

}  // namespace sb
