#pragma once

#include <memory>

#include "hatgame/pairing.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

// Block T with thresholds a < |T|/2 <= b, a + 2 <= b. `a` may be negative,
// which makes the "guess blue" branch unreachable.
struct PartialStrategyParams {
  PlayerSet block;
  int a;
  int b;
  Pairing pairing;

  // Throws ContractError unless the thresholds are admissible and the block
  // respects the pairing.
  void validate() const;
};

// Decision of a block member who sees `visible_reds` red hats inside the
// block: red at >= b, blue at <= a, otherwise fall through to the pairing rule.
enum class BlockDecision { GuessRed, GuessBlue, FollowPairing };

constexpr BlockDecision block_decision(int visible_reds, int a, int b) {
  if (visible_reds >= b) return BlockDecision::GuessRed;
  if (visible_reds <= a) return BlockDecision::GuessBlue;
  return BlockDecision::FollowPairing;
}

// Players inside the block follow S(T, a, b); players outside it follow the
// plain pairing rule so the profile is total on [n].
class PartialStrategy final : public StrategyProfile {
 public:
  explicit PartialStrategy(PartialStrategyParams params);

  const PartialStrategyParams& params() const { return params_; }

  Color guess(const VisibleView& view) const override;
  // Throws ContractError if the observer is not in the block.
  Color guess_in_block(const VisibleView& view) const;

 private:
  PartialStrategyParams params_;
};

std::shared_ptr<const PartialStrategy> partial_strategy(PartialStrategyParams params);

// Guaranteed number of correct guesses inside the block, by |R_ω ∩ T|:
//   > b        -> m
//   = b        -> b - |T|/2
//   a+2..b-1   -> |T|/2
//   = a+1      -> |T|/2 - a - 1
//   <= a       -> m
// where m = max(|R_ω ∩ T|, |B_ω ∩ T|).
int lemma_table_bound(const HatDistribution& omega, const PartialStrategyParams& params);

// True when |R_ω ∩ T| is a+1 or b, the two rows where the guarantee drops.
bool partial_fails(int reds_in_block, int a, int b);

}  // namespace hatgame
