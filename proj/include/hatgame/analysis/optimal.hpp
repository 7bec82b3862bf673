#pragma once

#include <cstdint>

namespace hatgame {

inline constexpr int kMaxOptimalSearchN = 3;

struct OptimalReport {
  int n;
  int best_min_correct;  // max over profiles of min over ω of cor
  int best_worst_loss;   // min over profiles of max over ω of max{r,b} - cor
  std::uint64_t strategies_enumerated;
};

// Enumerates every strategy profile for n players: each player's rule is a
// truth table over the 2^(n-1) views they can see.
OptimalReport search_optimal(int n);

}  // namespace hatgame
