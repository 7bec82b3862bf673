#pragma once

#include <cstdint>
#include <vector>

#include "hatgame/distribution.hpp"
#include "hatgame/partial.hpp"
#include "hatgame/partition.hpp"

namespace hatgame {

// Correct guesses by the block members of S(T, a, b) on omega.
int block_correct(const PartialStrategy& strategy, const HatDistribution& omega);

struct LemmaCheck {
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;       // block_correct < lemma_table_bound
  std::uint64_t equality_misses = 0;  // |R∩T| > b or <= a, yet block_correct != bound
  bool passed() const { return violations == 0 && equality_misses == 0; }
};

// All ω over the strategy's players (n <= kMaxExhaustiveN).
LemmaCheck check_partial_lemma(const PartialStrategy& strategy, int workers = 0);

struct FailureCheck {
  std::uint64_t evaluated = 0;
  std::uint64_t multiple_failures = 0;  // ω where two or more blocks fail
  std::uint64_t wrong_block = 0;        // a failing block i with i ≢ |R_ω| (mod k)
  bool passed() const { return multiple_failures == 0 && wrong_block == 0; }
};

// Blocks of `plan` that fail on omega, thresholds taken from the true outside
// red counts. Returned in ascending order.
std::vector<int> failing_blocks(const HatDistribution& omega, const PartitionPlan& plan);

// All ω over [plan.n] (plan.n <= kMaxExhaustiveN).
FailureCheck check_single_failure(const PartitionPlan& plan, int workers = 0);

}  // namespace hatgame
