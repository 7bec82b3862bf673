#pragma once

#include <optional>
#include <vector>

#include "hatgame/distribution.hpp"
#include "hatgame/pairing.hpp"
#include "hatgame/player_set.hpp"

namespace hatgame {

// Blocks T_1..T_k of consecutive players, each a union of canonical pairs.
// The first l blocks have size ceil_even(n/k), the rest floor_even(n/k).
struct PartitionPlan {
  int n;
  int k;
  int l;
  std::vector<int> block_sizes;
  Pairing pairing;

  int first(int block) const;  // 1-based block index, 1-based players
  int last(int block) const;
  int block_of(int player) const;
  int max_block_size() const;
  PlayerSet block_set(int block) const;
  std::vector<int> block_members(int block) const;

 private:
  void check_block(int block) const;
};

// Smallest even integer >= num/den and largest even integer <= num/den.
int ceil_even(int num, int den);
int floor_even(int num, int den);

// k = max(2, ceil(cbrt(n/4))) for n >= 6. For n in {2, 4} the plan is the
// single block [n] (k = 1), on which the composite strategy is the pairing
// strategy.
PartitionPlan make_partition(int n);

struct Thresholds {
  int a;
  int b;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// b = least integer >= |T_i|/2 with outside_reds + b ≡ i (mod k); a = b - k - 1.
Thresholds compute_thresholds(int outside_reds, const PartitionPlan& plan, int block);

// Same, with the outside count read off the view of a player in T_i. Only
// players [1, plan.n] are counted, so views may be over a larger game.
Thresholds compute_thresholds(const VisibleView& view, const PartitionPlan& plan, int block);

struct GuaranteeBound {
  int n;
  // max|T_i|/2 + (k-1)^2; always an integer because blocks have even size.
  std::optional<int> structural_loss;
  double theorem_loss_even;     // 1.2 n^(2/3) + 1
  double theorem_loss_general;  // 1.2 n^(2/3) + 2

  double theorem_loss() const { return n % 2 == 0 ? theorem_loss_even : theorem_loss_general; }
};

GuaranteeBound guarantee_bound(int n);
GuaranteeBound guarantee_bound(int n, const PartitionPlan& plan);

}  // namespace hatgame
