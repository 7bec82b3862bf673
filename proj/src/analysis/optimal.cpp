#include "hatgame/analysis/optimal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

OptimalReport search_optimal(int n) {
  if (n < 1) throw ContractError("search_optimal needs n >= 1");
  if (n > kMaxOptimalSearchN) {
    throw CapacityError("search_optimal is limited to n <= " + std::to_string(kMaxOptimalSearchN) +
                        "; the profile space is (2^(2^(n-1)))^n");
  }
  // ω is an n-bit word, bit j set meaning player j+1 wears red. A player's
  // view is ω with their own bit deleted; bit v of their truth table is the
  // guess (1 = red) on view v.
  const int views = 1 << (n - 1);
  const int table_bits = n * views;
  const std::uint64_t profiles = std::uint64_t{1} << table_bits;
  const unsigned omegas = 1U << n;

  int best_min = std::numeric_limits<int>::min();
  int best_loss = std::numeric_limits<int>::max();
  for (std::uint64_t profile = 0; profile < profiles; ++profile) {
    int min_correct = n;
    int worst_loss = std::numeric_limits<int>::min();
    for (unsigned omega = 0; omega < omegas; ++omega) {
      int correct = 0;
      for (int j = 0; j < n; ++j) {
        const unsigned low = omega & ((1U << j) - 1);
        const unsigned high = omega >> (j + 1);
        const unsigned view = low | (high << j);
        const unsigned guess = (profile >> (j * views + static_cast<int>(view))) & 1U;
        correct += guess == ((omega >> j) & 1U) ? 1 : 0;
      }
      const int reds = std::popcount(omega);
      const int target = std::max(reds, n - reds);
      min_correct = std::min(min_correct, correct);
      worst_loss = std::max(worst_loss, target - correct);
    }
    best_min = std::max(best_min, min_correct);
    best_loss = std::min(best_loss, worst_loss);
  }
  return {n, best_min, best_loss, profiles};
}

}  // namespace hatgame
