#include "hatgame/analysis/sweep.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>
#include <string>

#include <omp.h>

#include "hatgame/errors.hpp"

namespace hatgame {

SweepAccumulator::SweepAccumulator(int n, std::optional<double> loss_budget)
    : loss_budget_(loss_budget),
      min_correct_(std::numeric_limits<int>::max()),
      worst_loss_(std::numeric_limits<int>::min()),
      witness_key_(std::numeric_limits<std::uint64_t>::max()),
      histogram_(static_cast<std::size_t>(n) + 1, 0) {}

void SweepAccumulator::add(std::uint64_t key, int correct, int target) {
  const int loss = target - correct;
  min_correct_ = std::min(min_correct_, correct);
  if (loss > worst_loss_ || (loss == worst_loss_ && key < witness_key_)) {
    worst_loss_ = loss;
    witness_key_ = key;
  }
  ++histogram_[static_cast<std::size_t>(correct)];
  total_correct_ += static_cast<std::uint64_t>(correct);
  ++evaluated_;
  if (loss_budget_ && static_cast<double>(loss) > *loss_budget_) ++violations_;
}

void SweepAccumulator::merge(const SweepAccumulator& other) {
  if (other.evaluated_ == 0) return;
  min_correct_ = std::min(min_correct_, other.min_correct_);
  if (other.worst_loss_ > worst_loss_ || (other.worst_loss_ == worst_loss_ && other.witness_key_ < witness_key_)) {
    worst_loss_ = other.worst_loss_;
    witness_key_ = other.witness_key_;
  }
  for (std::size_t c = 0; c < histogram_.size(); ++c) histogram_[c] += other.histogram_[c];
  total_correct_ += other.total_correct_;
  evaluated_ += other.evaluated_;
  violations_ += other.violations_;
}

namespace {

void check_exhaustive(const StrategyProfile& strategy, int n, int cap) {
  if (strategy.n() != n) throw ContractError("strategy is for n = " + std::to_string(strategy.n()));
  if (n < 1) throw ContractError("n must be positive");
  if (n > cap) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the exhaustive limit of " + std::to_string(cap) +
                        "; use sampling instead");
  }
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Splits [0, total) into `chunks` contiguous ranges and runs `body(chunk,
// begin, end, acc)` on OpenMP workers; partial results merge in chunk order.
template <typename Body>
SweepAccumulator parallel_reduce(std::uint64_t total, int n, std::optional<double> loss_budget, int workers,
                                 Body body) {
  const auto chunks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, 1024));
  std::vector<SweepAccumulator> parts(static_cast<std::size_t>(chunks), SweepAccumulator(n, loss_budget));
  std::vector<std::exception_ptr> errors(parts.size());

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto begin = total / static_cast<std::uint64_t>(chunks) * static_cast<std::uint64_t>(c) +
                       std::min<std::uint64_t>(static_cast<std::uint64_t>(c), total % static_cast<std::uint64_t>(chunks));
    const auto len = total / static_cast<std::uint64_t>(chunks) +
                     (static_cast<std::uint64_t>(c) < total % static_cast<std::uint64_t>(chunks) ? 1 : 0);
    try {
      body(begin, begin + len, parts[static_cast<std::size_t>(c)]);
    } catch (...) {
      errors[static_cast<std::size_t>(c)] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepAccumulator merged(n, loss_budget);
  for (const auto& part : parts) merged.merge(part);
  return merged;
}

void sweep_range(const StrategyProfile& strategy, int n, std::uint64_t begin, std::uint64_t end,
                 SweepAccumulator& acc) {
  HatDistribution omega = HatDistribution::uniform(n, Color::Red);
  for (std::uint64_t x = begin; x < end; ++x) {
    omega.assign_index(x);
    acc.add(x, count_correct(strategy, omega), majority_target(omega));
  }
}

WorstCaseReport to_report(const StrategyProfile& strategy, int n, SweepMode mode, const SweepAccumulator& acc,
                          std::optional<double> loss_budget, HatDistribution witness) {
  WorstCaseReport report{
      .strategy_name = strategy.name(),
      .n = n,
      .mode = mode,
      .min_correct = acc.min_correct(),
      .worst_loss = acc.worst_loss(),
      .witness = std::move(witness),
      .histogram = {},
      .total_correct = std::nullopt,
      .evaluated = acc.evaluated(),
      .loss_budget = loss_budget,
      .violations = acc.violations(),
  };
  for (std::size_t c = 0; c < acc.histogram().size(); ++c) {
    if (acc.histogram()[c] != 0) report.histogram[static_cast<int>(c)] = acc.histogram()[c];
  }
  if (mode == SweepMode::Exhaustive) report.total_correct = BigInt(acc.total_correct());
  return report;
}

}  // namespace

WorstCaseReport exhaustive_worst_case(const StrategyProfile& strategy, int n, const SweepOptions& options) {
  check_exhaustive(strategy, n, kMaxExhaustiveN);
  const std::uint64_t total = std::uint64_t{1} << n;
  const SweepAccumulator acc =
      parallel_reduce(total, n, options.loss_budget, options.workers,
                      [&](std::uint64_t begin, std::uint64_t end, SweepAccumulator& part) {
                        sweep_range(strategy, n, begin, end, part);
                      });
  return to_report(strategy, n, SweepMode::Exhaustive, acc, options.loss_budget,
                   HatDistribution::from_index(n, acc.witness_key()));
}

WorstCaseReport exhaustive_worst_case_serial(const StrategyProfile& strategy, int n,
                                             std::optional<double> loss_budget) {
  check_exhaustive(strategy, n, kMaxExhaustiveN);
  SweepAccumulator acc(n, loss_budget);
  sweep_range(strategy, n, 0, std::uint64_t{1} << n, acc);
  return to_report(strategy, n, SweepMode::Exhaustive, acc, loss_budget,
                   HatDistribution::from_index(n, acc.witness_key()));
}

BigInt total_correct_over_omega(const StrategyProfile& strategy, int n, int workers) {
  check_exhaustive(strategy, n, kMaxExactSumN);
  const SweepAccumulator acc = parallel_reduce(std::uint64_t{1} << n, n, std::nullopt, workers,
                                               [&](std::uint64_t begin, std::uint64_t end, SweepAccumulator& part) {
                                                 sweep_range(strategy, n, begin, end, part);
                                               });
  return BigInt(acc.total_correct());
}

HatDistribution sample_distribution(int n, std::optional<int> red_count, std::uint64_t seed, std::uint64_t trial) {
  if (n < 1) throw ContractError("n must be positive");
  if (red_count && (*red_count < 0 || *red_count > n)) {
    throw ContractError("red count " + std::to_string(*red_count) + " outside [0, " + std::to_string(n) + "]");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);

  std::vector<Color> colors(static_cast<std::size_t>(n), Color::Blue);
  if (red_count) {
    std::fill_n(colors.begin(), *red_count, Color::Red);
    std::shuffle(colors.begin(), colors.end(), rng);
  } else {
    std::uint64_t bits = 0;
    for (int p = 0; p < n; ++p) {
      if (p % 64 == 0) bits = rng();
      colors[static_cast<std::size_t>(p)] = (bits >> (p % 64)) & 1U ? Color::Red : Color::Blue;
    }
  }
  return HatDistribution(colors);
}

WorstCaseReport monte_carlo(const StrategyProfile& strategy, int n, const SampleOptions& options) {
  if (strategy.n() != n) throw ContractError("strategy is for n = " + std::to_string(strategy.n()));
  if (options.trials < 1) throw ContractError("at least one trial is required");
  if (options.red_count && (*options.red_count < 0 || *options.red_count > n)) {
    throw ContractError("red count " + std::to_string(*options.red_count) + " outside [0, " + std::to_string(n) + "]");
  }
  const SweepAccumulator acc =
      parallel_reduce(options.trials, n, options.loss_budget, options.workers,
                      [&](std::uint64_t begin, std::uint64_t end, SweepAccumulator& part) {
                        for (std::uint64_t t = begin; t < end; ++t) {
                          const HatDistribution omega = sample_distribution(n, options.red_count, options.seed, t);
                          part.add(t, count_correct(strategy, omega), majority_target(omega));
                        }
                      });
  return to_report(strategy, n, SweepMode::Sampled, acc, options.loss_budget,
                   sample_distribution(n, options.red_count, options.seed, acc.witness_key()));
}

}  // namespace hatgame
