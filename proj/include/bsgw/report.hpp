#pragma once

// JSON reports. Rationals are strings "p/q" (or "p"); indices are 1-based.
// The text renderer only formats an already-built JSON report.

#include <string>

#include "bsgw/bott.hpp"
#include "json.hpp"

namespace bsgw {

using json = nlohmann::json;

inline constexpr const char* kSchema = "bsgw-report/1";

struct JobSpec {
  std::string type;
  std::vector<int> word;
  std::vector<std::string> m;

  // {"type": "A2", "word": [1,2,1], "m": ["1","1","3"]}; m entries may also be
  // JSON integers.
  static JobSpec from_json(const json& j);
  json to_json() const;
  BSInput to_input() const;
  static JobSpec from_input(const BSInput& in);
};

json chain_json(const GKChain& c);
json condition_p_json(const ConditionPReport& rep);
json curve_json(const CurveReport& rep);
json fan_json(const BottFan& f);
json collection_json(const BottCollection& c);
BottCollection collection_from_json(const json& j);
DivisorClass divisor_from_json(const json& j, const BottCollection& c);

// Toric data of a collection: fan, smoothness, relations, width. Adds a
// "warnings" entry when some lambda(l) <= 0.
json bott_json(const BottCollection& c, const DivisorClass& d);

json tower_json(const DegenerateTower& t);

// Full pipeline for one Bott-Samelson input, including cross-check verdicts.
// Throws InvariantViolation when a proven identity fails.
json report_json(const BSInput& in, bool force_degeneration = false);

json check_p_json(const BSInput& in);

std::string render_text(const json& report);

}  // namespace bsgw
