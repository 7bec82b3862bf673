#include "hatgame/partial.hpp"

#include <algorithm>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

void PartialStrategyParams::validate() const {
  const int size = block.size();
  if (size == 0) throw ContractError("partial strategy block is empty");
  if (block.universe() != pairing.n()) throw ContractError("block and pairing disagree on n");
  // a < |T|/2 <= b, in integers.
  if (!(2 * a < size && size <= 2 * b)) {
    throw ContractError("thresholds must satisfy a < |T|/2 <= b (a = " + std::to_string(a) +
                        ", b = " + std::to_string(b) + ", |T| = " + std::to_string(size) + ")");
  }
  if (a + 2 > b) throw ContractError("thresholds must satisfy a + 2 <= b");
  if (!pairing.respects(block)) throw ContractError("block splits a pair");
}

PartialStrategy::PartialStrategy(PartialStrategyParams params)
    : StrategyProfile("partial", params.pairing.n()), params_(std::move(params)) {
  params_.validate();
}

Color PartialStrategy::guess_in_block(const VisibleView& view) const {
  if (!params_.block.contains(view.observer())) {
    throw ContractError("player " + std::to_string(view.observer()) + " is not in the block");
  }
  switch (block_decision(view.count_red(params_.block), params_.a, params_.b)) {
    case BlockDecision::GuessRed: return Color::Red;
    case BlockDecision::GuessBlue: return Color::Blue;
    case BlockDecision::FollowPairing: break;
  }
  return pairing_guess(params_.pairing, view);
}

Color PartialStrategy::guess(const VisibleView& view) const {
  if (params_.block.contains(view.observer())) return guess_in_block(view);
  return pairing_guess(params_.pairing, view);
}

std::shared_ptr<const PartialStrategy> partial_strategy(PartialStrategyParams params) {
  return std::make_shared<PartialStrategy>(std::move(params));
}

bool partial_fails(int reds_in_block, int a, int b) { return reds_in_block == a + 1 || reds_in_block == b; }

int lemma_table_bound(const HatDistribution& omega, const PartialStrategyParams& params) {
  params.validate();
  if (omega.n() != params.block.universe()) throw ContractError("distribution and block disagree on n");
  const int size = params.block.size();
  const int reds = omega.count_red(params.block);
  const int m = std::max(reds, size - reds);
  const int half = size / 2;
  if (reds > params.b) return m;
  if (reds == params.b) return params.b - half;
  if (reds >= params.a + 2) return half;
  if (reds == params.a + 1) return half - params.a - 1;
  return m;
}

}  // namespace hatgame
