#include "sb/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace sb {

using nlohmann::json;

nlohmann::json int_to_json(const Int& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

namespace {

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  return Int(j.get<std::int64_t>());
}

}  // namespace

json row_to_json(const Row& row) {
  json entries = json::array();
  for (const Fraction& f : row.entries) entries.push_back(f.str());
  json reductions = json::array();
  for (const Int& g : row.reductions) reductions.push_back(int_to_json(g));
  return json{{"depth", row.depth}, {"entries", entries}, {"reductions", reductions}};
}

Row row_from_json(const json& j) {
  Row row;
  row.depth = j.at("depth").get<int>();
  for (const auto& e : j.at("entries")) {
    row.entries.push_back(Fraction::parse(e.get<std::string>()));
  }
  for (const auto& g : j.at("reductions")) {
    row.reductions.push_back(int_from_json(g));
  }
  return row;
}

std::string row_to_csv(const Row& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.entries.size(); ++i) {
    out << row.depth << ',' << i << ',' << row.entries[i].num() << ','
        << row.entries[i].den() << '\n';
  }
  return out.str();
}

std::string row_to_text(const Row& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.entries.size(); ++i) {
    if (i > 0) out << ' ';
    out << row.entries[i].str();
  }
  return out.str();
}

json locate_result_to_json(const LocateResult& result) {
  json j{{"found", result.found},
         {"depth", result.depth},
         {"index", int_to_json(result.index_in_row)},
         {"path", result.path},
         {"steps", result.steps_used}};
  if (result.weights) {
    j["weights"] = json{{"x", int_to_json(result.weights->x)},
                        {"y", int_to_json(result.weights->y)},
                        {"g", int_to_json(result.weights->g)}};
  }
  if (!result.found) {
    j["bracket"] = json{{"left", result.final_bracket.left.str()},
                        {"right", result.final_bracket.right.str()}};
  }
  return j;
}

json canonical_seed_to_json(const CanonicalSeed& canonical) {
  json cases = json::array();
  for (const auto& r : canonical.residues) {
    cases.push_back(json{
        {"prime_power", r.prime_power.prime.str() + "^" + std::to_string(r.prime_power.exponent)},
        {"case", r.tag == ResidueCase::Case1 ? "CASE1" : "CASE2"},
        {"residue", int_to_json(r.residue)}});
  }
  json j{{"D", int_to_json(canonical.D)}, {"V", int_to_json(canonical.V)}, {"cases", cases}};
  if (canonical.fallback_used) j["fallback_used"] = true;
  return j;
}

json equivalence_report_to_json(const EquivalenceReport& report) {
  json j{{"depth_checked", report.depth_checked}, {"equivalent", report.equivalent}};
  if (report.first_mismatch) {
    j["first_mismatch"] = json{{"depth", report.first_mismatch->depth},
                               {"insertion_index", report.first_mismatch->insertion_index},
                               {"left_factor", int_to_json(report.first_mismatch->left_factor)},
                               {"right_factor", int_to_json(report.first_mismatch->right_factor)}};
  }
  return j;
}

std::string det_list_to_csv(const DetList& dets) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dets.values.size(); ++i) {
    out << dets.depth << ',' << i << ',' << dets.values[i] << '\n';
  }
  return out.str();
}

json det_list_to_json(const DetList& dets) {
  json values = json::array();
  for (const Int& v : dets.values) values.push_back(int_to_json(v));
  return json{{"depth", dets.depth}, {"determinants", values}};
}

json sweep_report_to_json(const SweepReport& report) {
  json misses = json::array();
  for (const Fraction& f : report.misses) misses.push_back(f.str());
  return json{{"targets", report.targets},
              {"complete", report.complete()},
              {"misses", misses}};
}

}  // namespace sb
