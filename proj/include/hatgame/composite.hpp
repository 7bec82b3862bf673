#pragma once

#include <memory>
#include <vector>

#include "hatgame/partition.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

// Union of the block strategies S(T_i, a_i, b_i) over make_partition's blocks,
// each player deriving (a_i, b_i) from the red hats outside their block.
//
// Odd n: player n is a spectator who guesses the majority of what they see
// (ties to `tie_break`); everyone else plays the even-n strategy on [n-1]
// and never looks at hat n. This costs at most one extra guess, so the
// worst-case loss stays below 1.2 n^(2/3) + 2.
class CompositeStrategy final : public StrategyProfile {
 public:
  explicit CompositeStrategy(int n, Color tie_break = Color::Red);

  // Plan over the paired players: [n] for even n, [n-1] for odd n.
  const PartitionPlan& plan() const { return plan_; }
  bool has_spectator() const { return plan_.n != n(); }
  GuaranteeBound bound() const { return guarantee_bound(n(), plan_); }

  Color guess(const VisibleView& view) const override;

 private:
  PartitionPlan plan_;
  Color tie_break_;
  std::vector<int> block_of_;  // by player, slot 0 unused
  std::vector<int> first_;     // by block, slot 0 unused
  std::vector<int> last_;
};

std::shared_ptr<const CompositeStrategy> composite_strategy(int n, Color tie_break = Color::Red);

}  // namespace hatgame
