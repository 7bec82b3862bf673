#include "hatgame/strategy.hpp"

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

void check_dimensions(const StrategyProfile& strategy, const HatDistribution& omega) {
  if (strategy.n() != omega.n()) {
    throw ContractError("strategy '" + strategy.name() + "' is for n = " + std::to_string(strategy.n()) +
                        " but the distribution has n = " + std::to_string(omega.n()));
  }
}

class FunctionProfile final : public StrategyProfile {
 public:
  FunctionProfile(std::string name, int n, GuessRule rule) : StrategyProfile(std::move(name), n), rule_(std::move(rule)) {}

  Color guess(const VisibleView& view) const override { return rule_(view); }

 private:
  GuessRule rule_;
};

}  // namespace

StrategyProfile::StrategyProfile(std::string name, int n) : name_(std::move(name)), n_(n) {
  if (n < 1) throw ContractError("a strategy needs at least one player");
}

ProfilePtr make_profile(std::string name, int n, GuessRule rule) {
  return std::make_shared<FunctionProfile>(std::move(name), n, std::move(rule));
}

std::string GuessRecord::guesses_string() const {
  std::string out;
  out.reserve(guesses.size());
  for (Color c : guesses) out.push_back(to_char(c));
  return out;
}

GuessRecord evaluate(const StrategyProfile& strategy, const HatDistribution& omega) {
  check_dimensions(strategy, omega);
  GuessRecord record;
  record.guesses.reserve(static_cast<std::size_t>(omega.n()));
  for (int p = 1; p <= omega.n(); ++p) {
    const Color g = strategy.guess(VisibleView(omega, p));
    record.guesses.push_back(g);
    if (g == omega[p]) record.correct_set.push_back(p);
  }
  record.correct_count = static_cast<int>(record.correct_set.size());
  return record;
}

int count_correct(const StrategyProfile& strategy, const HatDistribution& omega) {
  check_dimensions(strategy, omega);
  int correct = 0;
  const PlayerSet& reds = omega.reds();
  for (int p = 1; p <= omega.n(); ++p) {
    const bool red = strategy.guess(VisibleView(omega, p)) == Color::Red;
    correct += red == reds.contains(p) ? 1 : 0;
  }
  return correct;
}

std::vector<int> verify_no_peek(const StrategyProfile& strategy, const HatDistribution& omega) {
  check_dimensions(strategy, omega);
  std::vector<int> violators;
  HatDistribution flipped = omega;
  for (int p = 1; p <= omega.n(); ++p) {
    flipped.flip(p);
    try {
      if (strategy.guess(VisibleView(omega, p)) != strategy.guess(VisibleView(flipped, p))) violators.push_back(p);
    } catch (const PeekError&) {
      violators.push_back(p);
    }
    flipped.flip(p);
  }
  return violators;
}

}  // namespace hatgame
