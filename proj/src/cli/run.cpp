#include "hatgame/cli/run.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "hatgame/analysis/bounds.hpp"
#include "hatgame/analysis/lemma_check.hpp"
#include "hatgame/analysis/optimal.hpp"
#include "hatgame/analysis/sweep.hpp"
#include "hatgame/cli/report_io.hpp"
#include "hatgame/composite.hpp"
#include "hatgame/errors.hpp"
#include "hatgame/majority.hpp"
#include "hatgame/pairing.hpp"
#include "hatgame/partial.hpp"
#include "hatgame/partition.hpp"

namespace hatgame::cli {

using nlohmann::ordered_json;

namespace {

int to_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return value;
}

}  // namespace

std::vector<int> parse_player_list(const std::string& text) {
  std::vector<int> players;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in player list '" + text + "'");
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      players.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dash));
    const int hi = to_int(item.substr(dash + 1));
    if (lo > hi) throw UsageError("descending range '" + item + "'");
    for (int p = lo; p <= hi; ++p) players.push_back(p);
  }
  if (players.empty()) throw UsageError("empty player list");
  std::sort(players.begin(), players.end());
  if (std::adjacent_find(players.begin(), players.end()) != players.end()) {
    throw UsageError("duplicate player in '" + text + "'");
  }
  return players;
}

namespace {

// Options shared by every command that takes a strategy.
struct StrategyFlags {
  std::string name = "composite";
  std::string tie_break;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::string> block;

  void attach(CLI::App* cmd) {
    cmd->add_option("--strategy", name, "pairing | majority | composite | partial")
        ->check(CLI::IsMember({"pairing", "majority", "composite", "partial"}));
    cmd->add_option("--tie-break", tie_break, "majority tie-break color (majority, composite)")
        ->check(CLI::IsMember({"R", "B"}));
    cmd->add_option("--a", a, "partial: blue threshold");
    cmd->add_option("--b", b, "partial: red threshold");
    cmd->add_option("--block", block, "partial: block players, e.g. 1-4 or 1,2,5,6");
  }

  StrategySpec finish() const {
    StrategySpec spec;
    spec.name = name;
    const bool partial = name == "partial";
    if (!partial && (a || b || block)) throw UsageError("--a, --b and --block only apply to --strategy partial");
    if (partial && !(a && b && block)) throw UsageError("--strategy partial needs --a, --b and --block");
    if (!tie_break.empty()) {
      if (name != "majority" && name != "composite") {
        throw UsageError("--tie-break only applies to majority and composite");
      }
      spec.tie_break = tie_break == "R" ? Color::Red : Color::Blue;
    }
    spec.a = a;
    spec.b = b;
    spec.block = block;
    return spec;
  }
};

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  return OutputFormat::Json;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

RunConfig parse_args(std::span<const std::string> args) {
  CLI::App app{"Strategies for the simultaneous two-color hat guessing game", "hatgame"};
  app.require_subcommand(1);

  RunConfig config;
  StrategyFlags flags;
  std::string format = "json";

  auto* eval = app.add_subcommand("eval", "score one strategy on one distribution");
  flags.attach(eval);
  eval->add_option("--omega", config.omega, "distribution over {R,B}, player 1 first")->required();
  add_format(eval, format);

  auto* sweep = app.add_subcommand("sweep", "exhaustive worst case over all 2^n distributions");
  flags.attach(sweep);
  sweep->add_option("--n", config.n, "number of players")->required();
  sweep->add_option("--workers", config.workers, "OpenMP workers (0 = default)");
  add_format(sweep, format);

  auto* identity = app.add_subcommand("identity", "exact binomial identity check");
  identity->add_option("--n", config.n, "even n")->required();
  add_format(identity, format);

  auto* bounds = app.add_subcommand("bounds", "loss bounds over a range of n");
  bounds->add_option("--n-min", config.n_min, "first n (default 2)");
  bounds->add_option("--n-max", config.n_max, "last n (default 64)");
  add_format(bounds, format);

  auto* optimal = app.add_subcommand("search-optimal", "enumerate every strategy profile (n <= 3)");
  optimal->add_option("--n", config.n, "number of players")->required();
  add_format(optimal, format);

  auto* sample = app.add_subcommand("sample", "seeded Monte Carlo worst case");
  flags.attach(sample);
  sample->add_option("--n", config.n, "number of players")->required();
  sample->add_option("--trials", config.trials, "number of sampled distributions");
  sample->add_option("--seed", config.seed, "master seed");
  sample->add_option("--red-count", config.red_count, "fix the number of red hats");
  sample->add_option("--workers", config.workers, "OpenMP workers (0 = default)");
  add_format(sample, format);

  auto* plan = app.add_subcommand("plan", "block partition used by the composite strategy");
  plan->add_option("--n", config.n, "even n")->required();
  add_format(plan, format);

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (const auto* sub : app.get_subcommands()) text = sub->help();
    throw HelpRequested(text);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (eval->parsed()) config.command = Command::Eval;
  if (sweep->parsed()) config.command = Command::Sweep;
  if (identity->parsed()) config.command = Command::Identity;
  if (bounds->parsed()) config.command = Command::Bounds;
  if (optimal->parsed()) config.command = Command::SearchOptimal;
  if (sample->parsed()) config.command = Command::Sample;
  if (plan->parsed()) config.command = Command::Plan;

  if (eval->parsed() || sweep->parsed() || sample->parsed()) config.strategy = flags.finish();
  config.format = parse_format(format);
  if (config.workers < 0) throw UsageError("--workers must be >= 0");
  if (sample->parsed() && config.trials < 1) throw UsageError("--trials must be >= 1");
  return config;
}

namespace {

ProfilePtr build_strategy(const StrategySpec& spec, int n) {
  if (n < 1) throw UsageError("n must be positive");
  if (spec.name == "pairing") {
    if (n % 2 != 0) throw UsageError("the pairing strategy needs an even n");
    return pairing_strategy(canonical_pairing(n));
  }
  if (spec.name == "majority") return majority_strategy(n, spec.tie_break);
  if (spec.name == "composite") return composite_strategy(n, spec.tie_break);
  if (n % 2 != 0) throw UsageError("the partial strategy needs an even n");
  const auto players = parse_player_list(*spec.block);
  return partial_strategy({PlayerSet::of(n, players), *spec.a, *spec.b, canonical_pairing(n)});
}

// What a sweep or sample of `strategy` must satisfy.
struct Verdict {
  std::string criterion;
  bool passed = true;
};

std::optional<double> loss_budget_for(const StrategyProfile& strategy) {
  if (const auto* composite = dynamic_cast<const CompositeStrategy*>(&strategy)) {
    return composite->bound().theorem_loss();
  }
  return std::nullopt;
}

Verdict judge(const StrategyProfile& strategy, const WorstCaseReport& report, int workers) {
  if (const auto* composite = dynamic_cast<const CompositeStrategy*>(&strategy)) {
    const GuaranteeBound bound = composite->bound();
    Verdict v{"loss <= 1.2 n^(2/3) + " + std::string(strategy.n() % 2 == 0 ? "1" : "2"), report.passed()};
    if (report.mode == SweepMode::Exhaustive) {
      const int structural = *bound.structural_loss + (composite->has_spectator() ? 1 : 0);
      v.criterion += " and worst_loss <= " + std::to_string(structural) + " (max|T_i|/2 + (k-1)^2" +
                     (composite->has_spectator() ? " + 1)" : ")");
      v.passed = v.passed && report.worst_loss <= structural;
    }
    return v;
  }
  if (strategy.name() == "pairing") {
    const auto half = static_cast<std::uint64_t>(strategy.n() / 2);
    const bool exact = report.histogram.size() == 1 && report.histogram.begin()->first == static_cast<int>(half);
    return {"every distribution scores exactly n/2", exact};
  }
  if (const auto* partial = dynamic_cast<const PartialStrategy*>(&strategy)) {
    if (report.mode != SweepMode::Exhaustive) return {"none", true};
    return {"block correct >= lemma table bound on every distribution",
            check_partial_lemma(*partial, workers).passed()};
  }
  return {"none", true};
}

void emit(std::ostream& out, OutputFormat format, const ordered_json& j) {
  switch (format) {
    case OutputFormat::Json: out << j.dump(2) << '\n'; break;
    case OutputFormat::Text: write_text(out, j); break;
    case OutputFormat::Csv: write_csv_rows(out, ordered_json::array({j})); break;
  }
}

int emit_report(std::ostream& out, OutputFormat format, const StrategyProfile& strategy,
                const WorstCaseReport& report, int workers) {
  const Verdict verdict = judge(strategy, report, workers);
  ordered_json j = to_json(report);
  j["criterion"] = verdict.criterion;
  j["passed"] = verdict.passed;
  if (const auto* composite = dynamic_cast<const CompositeStrategy*>(&strategy)) {
    j["bound"] = to_json(composite->bound());
  }
  if (format == OutputFormat::Csv) {
    write_csv(out, report);
  } else {
    emit(out, format, j);
  }
  return verdict.passed ? kExitOk : kExitGuaranteeViolated;
}

int run_bounds(const RunConfig& config, std::ostream& out) {
  if (config.n_min < 2 || config.n_max < config.n_min) throw UsageError("need 2 <= --n-min <= --n-max");
  ordered_json rows = ordered_json::array();
  bool all_within = true;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    ordered_json row;
    row["n"] = n;
    const GuaranteeBound bound = n % 2 == 0 ? guarantee_bound(n, make_partition(n)) : guarantee_bound(n);
    row["structural_loss"] = bound.structural_loss ? ordered_json(*bound.structural_loss) : ordered_json(nullptr);
    row["theorem_loss_even"] = bound.theorem_loss_even;
    row["theorem_loss_general"] = bound.theorem_loss_general;
    row["lower_bound_loss"] = lower_bound_loss(n);
    if (bound.structural_loss) {
      const bool within = *bound.structural_loss <= bound.theorem_loss_even;
      all_within = all_within && within;
      row["structural_within_theorem"] = within;
    } else {
      row["structural_within_theorem"] = nullptr;
    }
    rows.push_back(row);
  }
  if (config.format == OutputFormat::Csv) {
    write_csv_rows(out, rows);
  } else {
    emit(out, config.format, {{"rows", rows}, {"passed", all_within}});
  }
  return all_within ? kExitOk : kExitGuaranteeViolated;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Eval: {
      const HatDistribution omega = decode(*config.omega);
      const ProfilePtr strategy = build_strategy(config.strategy, omega.n());
      emit(out, config.format, to_json(evaluate(*strategy, omega)));
      return kExitOk;
    }
    case Command::Sweep: {
      const ProfilePtr strategy = build_strategy(config.strategy, config.n);
      const WorstCaseReport report =
          exhaustive_worst_case(*strategy, config.n, {config.workers, loss_budget_for(*strategy)});
      return emit_report(out, config.format, *strategy, report, config.workers);
    }
    case Command::Identity: {
      if (config.n < 0 || config.n % 2 != 0) throw UsageError("identity needs an even n");
      const IdentityResult result = identity_check(config.n);
      emit(out, config.format, to_json(result));
      return result.equal ? kExitOk : kExitGuaranteeViolated;
    }
    case Command::Bounds: return run_bounds(config, out);
    case Command::SearchOptimal: {
      emit(out, config.format, to_json(search_optimal(config.n)));
      return kExitOk;
    }
    case Command::Sample: {
      const ProfilePtr strategy = build_strategy(config.strategy, config.n);
      const SampleOptions options{config.trials, config.red_count, config.seed, config.workers,
                                  loss_budget_for(*strategy)};
      const WorstCaseReport report = monte_carlo(*strategy, config.n, options);
      return emit_report(out, config.format, *strategy, report, config.workers);
    }
    case Command::Plan: {
      if (config.n < 2 || config.n % 2 != 0) throw UsageError("plan needs an even n >= 2");
      const PartitionPlan plan = make_partition(config.n);
      if (config.format == OutputFormat::Csv) {
        ordered_json rows = ordered_json::array();
        for (int i = 1; i <= plan.k; ++i) {
          rows.push_back({{"block", i}, {"first", plan.first(i)}, {"last", plan.last(i)}, {"size", plan.block_sizes[i - 1]}});
        }
        write_csv_rows(out, rows);
      } else {
        emit(out, config.format, to_json(plan));
      }
      return kExitOk;
    }
  }
  return kExitUsage;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const EncodingError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace hatgame::cli
