#include <vector>

#include <gtest/gtest.h>

#include "hatgame/errors.hpp"
#include "hatgame/majority.hpp"
#include "hatgame/pairing.hpp"

namespace hatgame {
namespace {

TEST(CanonicalPairing, Layout) {
  const auto two = canonical_pairing(2);
  ASSERT_EQ(two.pairs().size(), 1U);
  EXPECT_EQ(two.pairs()[0], (PlayerPair{1, 2}));

  const auto six = canonical_pairing(6);
  EXPECT_EQ(std::vector<PlayerPair>(six.pairs().begin(), six.pairs().end()),
            (std::vector<PlayerPair>{{1, 2}, {3, 4}, {5, 6}}));

  const auto four = canonical_pairing(4);
  std::vector<int> seen;
  for (const auto& [x, y] : four.pairs()) {
    seen.push_back(x);
    seen.push_back(y);
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4}));
}

TEST(CanonicalPairing, RejectsOddOrEmpty) {
  EXPECT_THROW(canonical_pairing(3), ContractError);
  EXPECT_THROW(canonical_pairing(0), ContractError);
  EXPECT_THROW(canonical_pairing(-2), ContractError);
}

TEST(Pairing, Validation) {
  EXPECT_NO_THROW(Pairing(4, {{3, 1}, {2, 4}}));
  EXPECT_THROW(Pairing(4, {{1, 2}, {2, 3}}), ContractError);
  EXPECT_THROW(Pairing(4, {{1, 1}, {3, 4}}), ContractError);
  EXPECT_THROW(Pairing(4, {{1, 2}}), ContractError);
  EXPECT_THROW(Pairing(4, {{1, 2}, {3, 5}}), ContractError);
}

TEST(Pairing, Respects) {
  const auto p = canonical_pairing(6);
  EXPECT_TRUE(p.respects(PlayerSet::range(6, 3, 6)));
  EXPECT_FALSE(p.respects(PlayerSet::range(6, 2, 5)));
}

// One correct guess per pair on every ω, n <= 14; also for a shuffled pairing.
TEST(PairingStrategy, ExactlyHalfOnEveryDistribution) {
  for (int n = 2; n <= 14; n += 2) {
    const auto strategy = pairing_strategy(canonical_pairing(n));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      ASSERT_EQ(count_correct(*strategy, HatDistribution::from_index(n, x)), n / 2) << n << ' ' << x;
    }
  }
  const auto shuffled = pairing_strategy(Pairing(6, {{6, 1}, {3, 5}, {2, 4}}));
  for (std::uint64_t x = 0; x < 64; ++x) {
    ASSERT_EQ(count_correct(*shuffled, HatDistribution::from_index(6, x)), 3);
  }
}

// Off balance the majority strategy scores max{r,b}; on balance it scores 0.
TEST(MajorityStrategy, OptimalOffBalanceZeroOnBalance) {
  for (int n = 2; n <= 14; n += 2) {
    for (Color tie : {Color::Red, Color::Blue}) {
      const auto strategy = majority_strategy(n, tie);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const auto omega = HatDistribution::from_index(n, x);
        const int expected = omega.red_count() == omega.blue_count() ? 0 : majority_target(omega);
        ASSERT_EQ(count_correct(*strategy, omega), expected) << omega.to_string();
      }
    }
  }
}

TEST(MajorityStrategy, TieBreakDecidesOddViews) {
  // n = 3, "RBR": player 1 sees B,R (tie); player 2 sees R,R; player 3 sees R,B (tie).
  EXPECT_EQ(evaluate(*majority_strategy(3, Color::Red), decode("RBR")).guesses_string(), "RRR");
  EXPECT_EQ(evaluate(*majority_strategy(3, Color::Blue), decode("RBR")).guesses_string(), "BRB");
  EXPECT_THROW(majority_strategy(1), ContractError);
}

}  // namespace
}  // namespace hatgame
