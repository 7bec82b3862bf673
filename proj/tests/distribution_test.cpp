#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hatgame/distribution.hpp"
#include "hatgame/errors.hpp"
#include "oracles.hpp"

namespace hatgame {
namespace {

TEST(Color, ComplementIsInvolution) {
  EXPECT_EQ(complement(Color::Red), Color::Blue);
  EXPECT_EQ(complement(Color::Blue), Color::Red);
  EXPECT_EQ(complement(complement(Color::Red)), Color::Red);
}

TEST(HatDistribution, ParsesText) {
  const auto omega = decode("RRBB");
  EXPECT_EQ(omega.n(), 4);
  EXPECT_EQ(omega.reds().members(), (std::vector<int>{1, 2}));
  EXPECT_EQ(omega.reds().complement().members(), (std::vector<int>{3, 4}));

  const auto single = decode("R");
  EXPECT_EQ(single.n(), 1);
  EXPECT_EQ(single.red_count(), 1);

  const auto alternating = decode("RBRBRB");
  EXPECT_EQ(alternating.red_count(), 3);
  EXPECT_EQ(alternating.blue_count(), 3);
}

TEST(HatDistribution, RejectsBadText) {
  EXPECT_THROW(decode(""), EncodingError);
  EXPECT_THROW(decode("RRGB"), EncodingError);
  EXPECT_THROW(decode("rb"), EncodingError);
  EXPECT_THROW(make_distribution(std::vector<Color>{}), EncodingError);
}

TEST(HatDistribution, MajorityTarget) {
  EXPECT_EQ(majority_target(decode("RRBB")), 2);
  EXPECT_EQ(majority_target(decode("RRRB")), 3);
  EXPECT_EQ(majority_target(decode("BBBBBB")), 6);
}

TEST(HatDistribution, IndexOrderIsLexicographic) {
  EXPECT_EQ(HatDistribution::from_index(4, 0).to_string(), "RRRR");
  EXPECT_EQ(HatDistribution::from_index(4, 1).to_string(), "RRRB");
  EXPECT_EQ(HatDistribution::from_index(4, 15).to_string(), "BBBB");
  for (std::uint64_t x = 0; x < 256; ++x) {
    const auto omega = HatDistribution::from_index(8, x);
    EXPECT_EQ(omega.to_string(), oracle::hats_from_index(8, x));
    EXPECT_EQ(omega.index(), x);
  }
  EXPECT_THROW(HatDistribution::from_index(4, 16), ContractError);
}

// decode(encode(ω)) = ω and the counts agree with a character count, for
// every ω with n <= 14.
TEST(HatDistribution, TextRoundTripExhaustive) {
  for (int n = 1; n <= 14; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto omega = HatDistribution::from_index(n, x);
      const std::string text = encode(omega);
      ASSERT_EQ(decode(text), omega);
      ASSERT_EQ(omega.red_count(), oracle::reds(text, 1, n));
      ASSERT_EQ(omega.red_count() + omega.blue_count(), n);
    }
  }
}

TEST(HatDistribution, FlipAndRangeCountsAgreeWithNaiveCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 300);
    std::string text(static_cast<std::size_t>(n), 'R');
    for (auto& c : text) c = rng() & 1U ? 'R' : 'B';
    auto omega = decode(text);
    const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    omega.flip(p);
    text[static_cast<std::size_t>(p - 1)] = oracle::flip(text[static_cast<std::size_t>(p - 1)]);
    ASSERT_EQ(omega.to_string(), text);
    ASSERT_EQ(omega.red_count(), oracle::reds(text, 1, n));
    const int lo = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int hi = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n - lo + 1));
    ASSERT_EQ(omega.count_red(lo, hi), oracle::reds(text, lo, hi));
    ASSERT_EQ(omega.count_red(PlayerSet::range(n, lo, hi)), oracle::reds(text, lo, hi));
  }
}

TEST(PlayerSet, RangeMembersAndComplement) {
  const auto s = PlayerSet::range(130, 60, 70);
  EXPECT_EQ(s.size(), 11);
  EXPECT_TRUE(s.contains(64));
  EXPECT_TRUE(s.contains(65));
  EXPECT_FALSE(s.contains(59));
  EXPECT_EQ(s.complement().size(), 119);
  EXPECT_EQ(s.count_in_range(1, 64), 5);
  EXPECT_EQ(PlayerSet::range(5, 3, 2).size(), 0);
  EXPECT_THROW(PlayerSet::range(5, 0, 2), ContractError);
  EXPECT_THROW(PlayerSet(4).intersection_size(PlayerSet(5)), ContractError);
}

TEST(VisibleView, GuardsTheObserversHat) {
  const auto omega = decode("RBR");
  const VisibleView view(omega, 2);
  EXPECT_EQ(view[1], Color::Red);
  EXPECT_EQ(view[3], Color::Red);
  EXPECT_THROW(view[2], PeekError);
  EXPECT_THROW(view[4], ContractError);
  EXPECT_THROW(VisibleView(omega, 0), ContractError);
}

// Counts exposed by a view never depend on the observer's own hat.
TEST(VisibleView, CountsIgnoreOwnHat) {
  for (std::uint64_t x = 0; x < 64; ++x) {
    auto omega = HatDistribution::from_index(6, x);
    for (int p = 1; p <= 6; ++p) {
      auto flipped = omega;
      flipped.flip(p);
      const VisibleView a(omega, p);
      const VisibleView b(flipped, p);
      ASSERT_EQ(a.red_count(), b.red_count());
      ASSERT_EQ(a.count_red(1, 6), b.count_red(1, 6));
      ASSERT_EQ(a.count_red(PlayerSet::range(6, 2, 5)), b.count_red(PlayerSet::range(6, 2, 5)));
      int visible = 0;
      for (int q = 1; q <= 6; ++q) visible += q != p && omega[q] == Color::Red ? 1 : 0;
      ASSERT_EQ(a.red_count(), visible);
    }
  }
}

}  // namespace
}  // namespace hatgame
