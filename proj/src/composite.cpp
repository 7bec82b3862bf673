#include "hatgame/composite.hpp"

#include "hatgame/errors.hpp"
#include "hatgame/majority.hpp"
#include "hatgame/partial.hpp"

namespace hatgame {

namespace {

PartitionPlan plan_for(int n) {
  if (n < 2) throw ContractError("composite strategy needs n >= 2");
  return make_partition(n % 2 == 0 ? n : n - 1);
}

}  // namespace

CompositeStrategy::CompositeStrategy(int n, Color tie_break)
    : StrategyProfile("composite", n),
      plan_(plan_for(n)),
      tie_break_(tie_break),
      block_of_(static_cast<std::size_t>(n) + 1, 0),
      first_(static_cast<std::size_t>(plan_.k) + 1, 0),
      last_(first_.size(), 0) {
  for (int i = 1; i <= plan_.k; ++i) {
    first_[static_cast<std::size_t>(i)] = plan_.first(i);
    last_[static_cast<std::size_t>(i)] = plan_.last(i);
    for (int p = plan_.first(i); p <= plan_.last(i); ++p) block_of_[static_cast<std::size_t>(p)] = i;
  }
}

Color CompositeStrategy::guess(const VisibleView& view) const {
  const int self = view.observer();
  if (self > plan_.n) return majority_guess(view, tie_break_);
  // A single block means n <= 4, where the plain pairing rule is used.
  if (plan_.k == 1) return pairing_guess(plan_.pairing, view);

  const int block = block_of_[static_cast<std::size_t>(self)];
  const int lo = first_[static_cast<std::size_t>(block)];
  const int hi = last_[static_cast<std::size_t>(block)];
  const int inside = view.count_red(lo, hi);
  const int outside = view.count_red(1, plan_.n) - inside;
  const Thresholds t = compute_thresholds(outside, plan_, block);
  switch (block_decision(inside, t.a, t.b)) {
    case BlockDecision::GuessRed: return Color::Red;
    case BlockDecision::GuessBlue: return Color::Blue;
    case BlockDecision::FollowPairing: break;
  }
  return pairing_guess(plan_.pairing, view);
}

std::shared_ptr<const CompositeStrategy> composite_strategy(int n, Color tie_break) {
  return std::make_shared<CompositeStrategy>(n, tie_break);
}

}  // namespace hatgame
