#pragma once

#include <span>
#include <vector>

#include "hatgame/player_set.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

// Ordered pair: `x` calls y's color, `y` calls the opposite of x's color.
struct PlayerPair {
  int x;
  int y;
  friend bool operator==(const PlayerPair&, const PlayerPair&) = default;
};

// Disjoint ordered pairs covering all players [n]; n must be even.
class Pairing {
 public:
  Pairing(int n, std::vector<PlayerPair> pairs);

  int n() const { return n_; }
  std::span<const PlayerPair> pairs() const { return pairs_; }
  int partner(int p) const { return partner_.at(static_cast<std::size_t>(p)); }
  bool is_first(int p) const { return first_.at(static_cast<std::size_t>(p)) != 0; }

  // Every pair lies entirely inside or entirely outside `players`.
  bool respects(const PlayerSet& players) const;

 private:
  int n_;
  std::vector<PlayerPair> pairs_;
  std::vector<int> partner_;       // indexed by player, slot 0 unused
  std::vector<char> first_;
};

// ((1,2), (3,4), ..., (n-1,n)).
Pairing canonical_pairing(int n);

// The pairing-rule guess of view.observer(); exactly one player of each
// pair guesses right.
Color pairing_guess(const Pairing& pairing, const VisibleView& view);

ProfilePtr pairing_strategy(const Pairing& pairing);

}  // namespace hatgame
