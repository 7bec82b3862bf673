#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatgame/analysis/bigint.hpp"
#include "hatgame/distribution.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

inline constexpr int kMaxExhaustiveN = 24;
inline constexpr int kMaxExactSumN = 14;

enum class SweepMode { Exhaustive, Sampled };

struct WorstCaseReport {
  std::string strategy_name;
  int n = 0;
  SweepMode mode = SweepMode::Exhaustive;
  int min_correct = 0;
  int worst_loss = 0;  // max over evaluated ω of max{r,b} - cor
  HatDistribution witness;
  std::map<int, std::uint64_t> histogram;  // correct count -> number of ω
  std::optional<BigInt> total_correct;     // exhaustive mode only
  std::uint64_t evaluated = 0;
  std::optional<double> loss_budget;
  std::uint64_t violations = 0;            // ω whose loss exceeds loss_budget

  bool passed() const { return violations == 0; }
};

// Partial result of a sweep over some subset of Ω. Merging is associative and
// commutative; the witness is the attaining ω with the smallest key (the
// lexicographic index in exhaustive mode, the trial number when sampling),
// so the merged result does not depend on how work was split.
class SweepAccumulator {
 public:
  SweepAccumulator(int n, std::optional<double> loss_budget);

  void add(std::uint64_t key, int correct, int target);
  void merge(const SweepAccumulator& other);

  int min_correct() const { return min_correct_; }
  int worst_loss() const { return worst_loss_; }
  std::uint64_t witness_key() const { return witness_key_; }
  std::uint64_t total_correct() const { return total_correct_; }
  std::uint64_t evaluated() const { return evaluated_; }
  std::uint64_t violations() const { return violations_; }
  const std::vector<std::uint64_t>& histogram() const { return histogram_; }

  friend bool operator==(const SweepAccumulator&, const SweepAccumulator&) = default;

 private:
  std::optional<double> loss_budget_;
  int min_correct_;
  int worst_loss_;
  std::uint64_t witness_key_;
  std::vector<std::uint64_t> histogram_;
  std::uint64_t total_correct_ = 0;
  std::uint64_t evaluated_ = 0;
  std::uint64_t violations_ = 0;
};

struct SweepOptions {
  int workers = 0;  // 0: OpenMP default
  std::optional<double> loss_budget;
};

// Every ω in {R,B}^n, split across OpenMP workers. n <= kMaxExhaustiveN.
WorstCaseReport exhaustive_worst_case(const StrategyProfile& strategy, int n, const SweepOptions& options = {});

// Single-threaded reference for exhaustive_worst_case.
WorstCaseReport exhaustive_worst_case_serial(const StrategyProfile& strategy, int n,
                                             std::optional<double> loss_budget = std::nullopt);

// Σ_ω cor(S, ω), exactly. n <= kMaxExactSumN.
BigInt total_correct_over_omega(const StrategyProfile& strategy, int n, int workers = 0);

struct SampleOptions {
  std::uint64_t trials = 1;
  std::optional<int> red_count;  // unset: uniform over Ω
  std::uint64_t seed = 0;
  int workers = 0;
  std::optional<double> loss_budget;
};

// Trial `trial` of a seeded sampling run. Each trial owns an RNG stream
// derived from (seed, trial), so results do not depend on worker count.
HatDistribution sample_distribution(int n, std::optional<int> red_count, std::uint64_t seed, std::uint64_t trial);

WorstCaseReport monte_carlo(const StrategyProfile& strategy, int n, const SampleOptions& options);

}  // namespace hatgame
