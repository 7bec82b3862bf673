#include "hatgame/analysis/lemma_check.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <omp.h>

#include "hatgame/analysis/sweep.hpp"
#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

void check_size(int n) {
  if (n > kMaxExhaustiveN) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the exhaustive limit of " +
                        std::to_string(kMaxExhaustiveN));
  }
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace

int block_correct(const PartialStrategy& strategy, const HatDistribution& omega) {
  int correct = 0;
  for (int p : strategy.params().block.members()) {
    correct += strategy.guess_in_block(VisibleView(omega, p)) == omega[p] ? 1 : 0;
  }
  return correct;
}

LemmaCheck check_partial_lemma(const PartialStrategy& strategy, int workers) {
  const int n = strategy.n();
  check_size(n);
  const auto& params = strategy.params();
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::uint64_t violations = 0;
  std::uint64_t misses = 0;

#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : violations, misses)
  {
    HatDistribution omega = HatDistribution::uniform(n, Color::Red);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < total; ++x) {
      omega.assign_index(static_cast<std::uint64_t>(x));
      const int got = block_correct(strategy, omega);
      const int bound = lemma_table_bound(omega, params);
      if (got < bound) ++violations;
      const int reds = omega.count_red(params.block);
      if ((reds > params.b || reds <= params.a) && got != bound) ++misses;
    }
  }
  return {static_cast<std::uint64_t>(total), violations, misses};
}

std::vector<int> failing_blocks(const HatDistribution& omega, const PartitionPlan& plan) {
  if (omega.n() < plan.n) throw ContractError("distribution smaller than the plan");
  std::vector<int> out;
  const int paired_reds = omega.count_red(1, plan.n);
  for (int i = 1; i <= plan.k; ++i) {
    const int inside = omega.count_red(plan.first(i), plan.last(i));
    const Thresholds t = compute_thresholds(paired_reds - inside, plan, i);
    if (partial_fails(inside, t.a, t.b)) out.push_back(i);
  }
  return out;
}

FailureCheck check_single_failure(const PartitionPlan& plan, int workers) {
  const int n = plan.n;
  check_size(n);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::uint64_t multiple = 0;
  std::uint64_t wrong = 0;

#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : multiple, wrong)
  {
    HatDistribution omega = HatDistribution::uniform(n, Color::Red);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < total; ++x) {
      omega.assign_index(static_cast<std::uint64_t>(x));
      const auto failing = failing_blocks(omega, plan);
      if (failing.size() > 1) ++multiple;
      for (int i : failing) {
        if (i % plan.k != omega.red_count() % plan.k) ++wrong;
      }
    }
  }
  return {static_cast<std::uint64_t>(total), multiple, wrong};
}

}  // namespace hatgame
