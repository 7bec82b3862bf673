#include "hatgame/cli/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace hatgame {

using nlohmann::ordered_json;

namespace {

std::string format_number(const ordered_json& v) {
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(12) << v.get<double>();
    return s.str();
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const ordered_json& v) {
  std::string text = format_number(v);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_decimal(const BigInt& value) { return value.str(); }

ordered_json to_json(const GuessRecord& record) {
  return {{"guesses", record.guesses_string()},
          {"correct_count", record.correct_count},
          {"correct_set", record.correct_set}};
}

ordered_json to_json(const PartitionPlan& plan) {
  ordered_json blocks = ordered_json::array();
  for (int i = 1; i <= plan.k; ++i) blocks.push_back(plan.block_members(i));
  return {{"n", plan.n}, {"k", plan.k}, {"l", plan.l}, {"block_sizes", plan.block_sizes}, {"blocks", blocks}};
}

ordered_json to_json(const WorstCaseReport& report) {
  ordered_json histogram = ordered_json::array();
  for (const auto& [correct, count] : report.histogram) {
    histogram.push_back({{"correct_count", correct}, {"count", count}});
  }
  ordered_json j;
  j["strategy"] = report.strategy_name;
  j["n"] = report.n;
  j["mode"] = report.mode == SweepMode::Exhaustive ? "exhaustive" : "sampled";
  j["evaluated"] = report.evaluated;
  j["min_correct"] = report.min_correct;
  j["worst_loss"] = report.worst_loss;
  j["witness"] = report.witness.to_string();
  j["total_correct"] = report.total_correct ? ordered_json(to_decimal(*report.total_correct)) : ordered_json(nullptr);
  j["loss_budget"] = report.loss_budget ? ordered_json(*report.loss_budget) : ordered_json(nullptr);
  j["violations"] = report.violations;
  j["histogram"] = histogram;
  return j;
}

ordered_json to_json(const OptimalReport& report) {
  return {{"n", report.n},
          {"best_min_correct", report.best_min_correct},
          {"best_worst_loss", report.best_worst_loss},
          {"strategies_enumerated", report.strategies_enumerated}};
}

ordered_json to_json(const IdentityResult& result) {
  return {{"n", result.n}, {"lhs", to_decimal(result.lhs)}, {"rhs", to_decimal(result.rhs)}, {"equal", result.equal}};
}

ordered_json to_json(const GuaranteeBound& bound) {
  return {{"n", bound.n},
          {"structural_loss", bound.structural_loss ? ordered_json(*bound.structural_loss) : ordered_json(nullptr)},
          {"theorem_loss_even", bound.theorem_loss_even},
          {"theorem_loss_general", bound.theorem_loss_general}};
}

void write_csv(std::ostream& out, const WorstCaseReport& report) {
  const char* mode = report.mode == SweepMode::Exhaustive ? "exhaustive" : "sampled";
  out << "strategy,n,mode,correct_count,count\n";
  for (const auto& [correct, count] : report.histogram) {
    out << report.strategy_name << ',' << report.n << ',' << mode << ',' << correct << ',' << count << '\n';
  }
}

void write_csv_rows(std::ostream& out, const ordered_json& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    out << '\n';
  }
}

void write_text(std::ostream& out, const ordered_json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      write_text(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        out << pad << "  -\n";
        write_text(out, item, indent + 4);
      }
    } else {
      out << pad << key << ": " << format_number(v) << '\n';
    }
  }
}

}  // namespace hatgame
