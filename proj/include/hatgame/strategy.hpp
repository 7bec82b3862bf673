#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hatgame/color.hpp"
#include "hatgame/distribution.hpp"

namespace hatgame {

// A deterministic guess rule for each of n players. Implementations see the
// game only through VisibleView, which is what makes a player's guess
// independent of their own hat. Profiles are immutable once built and safe to
// share between threads.
class StrategyProfile {
 public:
  StrategyProfile(std::string name, int n);
  virtual ~StrategyProfile() = default;

  int n() const { return n_; }
  const std::string& name() const { return name_; }

  virtual Color guess(const VisibleView& view) const = 0;

 private:
  std::string name_;
  int n_;
};

using ProfilePtr = std::shared_ptr<const StrategyProfile>;
using GuessRule = std::function<Color(const VisibleView&)>;

// Wraps an arbitrary callable; mostly for tests and ad-hoc strategies.
ProfilePtr make_profile(std::string name, int n, GuessRule rule);

struct GuessRecord {
  std::vector<Color> guesses;
  int correct_count = 0;
  std::vector<int> correct_set;  // ascending, 1-based

  int wrong_count() const { return static_cast<int>(guesses.size()) - correct_count; }
  std::string guesses_string() const;
};

GuessRecord evaluate(const StrategyProfile& strategy, const HatDistribution& omega);

// cor(S, ω) without building a GuessRecord; this is the sweep inner loop.
int count_correct(const StrategyProfile& strategy, const HatDistribution& omega);

// Players whose guess changes when their own hat is flipped, or whose rule
// tried to read their own hat. Empty means no-peek holds on omega.
std::vector<int> verify_no_peek(const StrategyProfile& strategy, const HatDistribution& omega);

}  // namespace hatgame
