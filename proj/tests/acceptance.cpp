// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hatgame/analysis/bounds.hpp"
#include "hatgame/analysis/lemma_check.hpp"
#include "hatgame/analysis/optimal.hpp"
#include "hatgame/analysis/sweep.hpp"
#include "hatgame/composite.hpp"
#include "hatgame/majority.hpp"
#include "hatgame/pairing.hpp"
#include "hatgame/partial.hpp"

namespace {

using namespace hatgame;
using Clock = std::chrono::steady_clock;

constexpr int kWorkers = 8;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  outcome.require(seconds < time_limit_s, "took " + std::to_string(seconds) + " s, limit " +
                                              std::to_string(time_limit_s) + " s");
  if (!outcome.passed) ++failures;
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", id, title.c_str(), seconds,
              outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
  std::fflush(stdout);
}

std::string at(int n) { return "n=" + std::to_string(n); }

// Every ordered perfect pairing of players 1..m.
void ordered_pairings(std::vector<int> free, std::vector<PlayerPair>& current,
                      const std::function<void(const std::vector<PlayerPair>&)>& visit) {
  if (free.empty()) {
    visit(current);
    return;
  }
  const int first = free.front();
  for (std::size_t j = 1; j < free.size(); ++j) {
    const int other = free[j];
    std::vector<int> rest;
    for (std::size_t q = 1; q < free.size(); ++q) {
      if (q != j) rest.push_back(free[q]);
    }
    for (const PlayerPair pair : {PlayerPair{first, other}, PlayerPair{other, first}}) {
      current.push_back(pair);
      ordered_pairings(rest, current, visit);
      current.pop_back();
    }
  }
}

std::vector<ProfilePtr> all_strategies(int n) {
  std::vector<ProfilePtr> out;
  if (n % 2 == 0) {
    out.push_back(pairing_strategy(canonical_pairing(n)));
    const int half = n / 2;
    const int block = half % 2 == 0 ? half : half + 1;
    out.push_back(partial_strategy({PlayerSet::range(n, 1, block), block / 2 - 2, block / 2 + 1, canonical_pairing(n)}));
  }
  out.push_back(majority_strategy(n));
  out.push_back(composite_strategy(n));
  return out;
}

}  // namespace

int main() {
  criterion(1, "pairing strategy scores exactly n/2 on every distribution, even n <= 14", 10.0, [] {
    Outcome o;
    for (int n = 2; n <= 14; n += 2) {
      const auto report = exhaustive_worst_case(*pairing_strategy(canonical_pairing(n)), n, {kWorkers, {}});
      o.require(report.histogram.size() == 1 && report.histogram.begin()->first == n / 2, at(n));
    }
    return o;
  });

  criterion(2, "sum over all distributions of correct guesses = n 2^(n-1), n <= 12", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
      const BigInt expected = BigInt(n) << (n - 1);
      if (n % 2 == 0) {
        o.require(total_correct_over_omega(*pairing_strategy(canonical_pairing(n)), n, kWorkers) == expected,
                  "pairing " + at(n));
      }
      o.require(total_correct_over_omega(*majority_strategy(n), n, kWorkers) == expected, "majority " + at(n));
      o.require(total_correct_over_omega(*composite_strategy(n), n, kWorkers) == expected, "composite " + at(n));
    }
    return o;
  });

  criterion(3, "binomial identity holds exactly for every even n <= 64", 1.0, [] {
    Outcome o;
    for (int n = 0; n <= 64; n += 2) {
      const auto result = identity_check(n);
      o.require(result.equal && result.lhs == result.rhs, at(n));
    }
    return o;
  });

  criterion(4, "composite: loss <= 1.2n^(2/3)+1 (even 6..18) / +2 (odd 7..17), worst <= structural", 120.0, [] {
    Outcome o;
    for (int n = 6; n <= 18; ++n) {
      const auto s = composite_strategy(n);
      const GuaranteeBound bound = s->bound();
      const double budget = n % 2 == 0 ? bound.theorem_loss_even : bound.theorem_loss_general;
      const auto report = exhaustive_worst_case(*s, n, {kWorkers, budget});
      o.require(report.evaluated == (std::uint64_t{1} << n), "coverage " + at(n));
      o.require(report.violations == 0, "theorem bound violated " + at(n));
      if (n % 2 == 0) o.require(report.worst_loss <= *bound.structural_loss, "structural bound violated " + at(n));
    }
    return o;
  });

  criterion(5, "partial strategy meets the lemma table for |T| in {2,4,6,8}, all a, b, pairings", 120.0, [] {
    Outcome o;
    std::uint64_t cases = 0;
    for (int size = 2; size <= 8; size += 2) {
      std::vector<int> players;
      for (int p = 1; p <= size; ++p) players.push_back(p);
      std::vector<PlayerPair> current;
      ordered_pairings(players, current, [&](const std::vector<PlayerPair>& pairs) {
        const Pairing pairing(size, pairs);
        for (int a = -2; 2 * a < size; ++a) {
          for (int b = size / 2; b <= size; ++b) {
            if (a + 2 > b) continue;
            const PartialStrategy s({PlayerSet::range(size, 1, size), a, b, pairing});
            const LemmaCheck check = check_partial_lemma(s, 1);
            cases += check.evaluated;
            o.require(check.violations == 0, "bound violated |T|=" + std::to_string(size));
            o.require(check.equality_misses == 0, "equality row missed |T|=" + std::to_string(size));
          }
        }
      });
    }
    o.require(cases > 0, "no cases enumerated");
    return o;
  });

  criterion(6, "at most one block fails per distribution, and it is the block i = |R| mod k (even n <= 14)", 60.0,
            [] {
              Outcome o;
              for (int n = 2; n <= 14; n += 2) {
                const FailureCheck check = check_single_failure(make_partition(n), kWorkers);
                o.require(check.multiple_failures == 0, "two blocks fail " + at(n));
                o.require(check.wrong_block == 0, "wrong failing block " + at(n));
              }
              return o;
            });

  criterion(7, "optimal search: best guarantee 0 / 1 / 1 at n = 1 / 2 / 3 over 2 / 16 / 4096 profiles", 1.0, [] {
    Outcome o;
    const auto one = search_optimal(1);
    const auto two = search_optimal(2);
    const auto three = search_optimal(3);
    o.require(one.best_min_correct == 0, "n=1");
    o.require(two.best_min_correct == 1 && two.strategies_enumerated == 16, "n=2");
    o.require(three.best_min_correct == 1 && three.strategies_enumerated == 4096, "n=3");
    return o;
  });

  criterion(8, "lower bound: f(100) = 2.9762 +- 1e-4, Robbins estimate for even n <= 64, no strategy beats it", 60.0,
            [] {
              Outcome o;
              o.require(std::abs(lower_bound_loss(100) - 2.9762) <= 1e-4,
                        "lower_bound_loss(100) = " + std::to_string(lower_bound_loss(100)));
              for (int n = 2; n <= 64; n += 2) o.require(robbins_check(n).holds, "robbins " + at(n));
              for (int n = 6; n <= 18; n += 2) {
                for (const auto& s : all_strategies(n)) {
                  if (s->name() == "partial") continue;
                  const auto report = exhaustive_worst_case(*s, n, {kWorkers, {}});
                  o.require(report.worst_loss >= lower_bound_loss(n), s->name() + " " + at(n));
                }
              }
              return o;
            });

  criterion(9, "Monte Carlo: composite at n = 1000 and 999, 10^4 samples per red-count setting, no violations",
            60.0, [] {
              Outcome o;
              for (int n : {1000, 999}) {
                const auto s = composite_strategy(n);
                const double budget = s->bound().theorem_loss();
                const std::vector<std::optional<int>> settings{std::nullopt, n / 2, n * 3 / 4, n * 9 / 10};
                for (const auto& red : settings) {
                  SampleOptions options;
                  options.trials = 10000;
                  options.red_count = red;
                  options.seed = 42;
                  options.workers = kWorkers;
                  options.loss_budget = budget;
                  const auto report = monte_carlo(*s, n, options);
                  o.require(report.evaluated == 10000 && report.violations == 0,
                            at(n) + " red=" + (red ? std::to_string(*red) : std::string("uniform")));
                }
              }
              return o;
            });

  criterion(10, "no-peek: 10^4 random own-hat flips per strategy for n in {8, 16, 100}, no guess changes", 60.0,
            [] {
              Outcome o;
              for (int n : {8, 16, 100}) {
                for (const auto& s : all_strategies(n)) {
                  std::uint64_t changed = 0;
                  for (std::uint64_t t = 0; t < 10000; ++t) {
                    HatDistribution omega = sample_distribution(n, std::nullopt, 2024, t);
                    const int p = 1 + static_cast<int>((t * 0x9E3779B97F4A7C15ULL >> 20) % static_cast<std::uint64_t>(n));
                    const Color before = s->guess(VisibleView(omega, p));
                    omega.flip(p);
                    if (s->guess(VisibleView(omega, p)) != before) ++changed;
                  }
                  o.require(changed == 0, s->name() + " " + at(n));
                }
              }
              return o;
            });

  std::printf("%s: %d criterion/criteria failed\n", failures == 0 ? "ALL PASSED" : "FAILED", failures);
  return failures;
}
