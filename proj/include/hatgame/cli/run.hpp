#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatgame/color.hpp"

namespace hatgame::cli {

// Exit codes: 0 success, 1 a mathematical guarantee was violated, 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGuaranteeViolated = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Eval, Sweep, Identity, Bounds, SearchOptimal, Sample, Plan };
enum class OutputFormat { Json, Csv, Text };

struct StrategySpec {
  std::string name = "composite";  // pairing | majority | composite | partial
  Color tie_break = Color::Red;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::string> block;  // partial only: "1-4", "1,2,5,6", "1-2,5-6"
};

struct RunConfig {
  Command command = Command::Eval;
  StrategySpec strategy;
  int n = 0;
  std::optional<std::string> omega;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::optional<int> red_count;
  int workers = 0;
  int n_min = 2;
  int n_max = 64;
  OutputFormat format = OutputFormat::Json;
};

// argv without the program name. Throws UsageError on anything malformed or
// on options that do not apply to the chosen command or strategy.
RunConfig parse_args(std::span<const std::string> args);

int execute(const RunConfig& config, std::ostream& out);

// parse_args + execute; errors go to `err` with exit code 2.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// "1-4,7,8" -> {1,2,3,4,7,8}; throws UsageError.
std::vector<int> parse_player_list(const std::string& text);

}  // namespace hatgame::cli
