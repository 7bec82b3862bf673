#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "hatgame/analysis/bounds.hpp"
#include "hatgame/analysis/optimal.hpp"
#include "hatgame/analysis/sweep.hpp"
#include "hatgame/partition.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

// Big integers are written as decimal strings so they survive any JSON reader.
std::string to_decimal(const BigInt& value);

nlohmann::ordered_json to_json(const GuessRecord& record);
nlohmann::ordered_json to_json(const PartitionPlan& plan);
nlohmann::ordered_json to_json(const WorstCaseReport& report);
nlohmann::ordered_json to_json(const OptimalReport& report);
nlohmann::ordered_json to_json(const IdentityResult& result);
nlohmann::ordered_json to_json(const GuaranteeBound& bound);

// One row per histogram bucket.
void write_csv(std::ostream& out, const WorstCaseReport& report);

// Flat objects as CSV: a header of keys and one row of values per object.
// Nested values are written as compact JSON.
void write_csv_rows(std::ostream& out, const nlohmann::ordered_json& rows);

// "key: value" lines; nested objects are indented.
void write_text(std::ostream& out, const nlohmann::ordered_json& value, int indent = 0);

}  // namespace hatgame
