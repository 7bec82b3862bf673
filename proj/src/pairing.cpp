#include "hatgame/pairing.hpp"

#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

Pairing::Pairing(int n, std::vector<PlayerPair> pairs)
    : n_(n), pairs_(std::move(pairs)), partner_(static_cast<std::size_t>(n) + 1, 0), first_(partner_.size(), 0) {
  if (n < 2 || n % 2 != 0) throw ContractError("a pairing needs an even, positive number of players");
  if (pairs_.size() * 2 != static_cast<std::size_t>(n)) throw ContractError("a pairing must have exactly n/2 pairs");
  for (const auto& [x, y] : pairs_) {
    for (int p : {x, y}) {
      if (p < 1 || p > n) throw ContractError("pair member " + std::to_string(p) + " outside [1, n]");
      if (partner_[static_cast<std::size_t>(p)] != 0) {
        throw ContractError("player " + std::to_string(p) + " appears in more than one pair");
      }
    }
    if (x == y) throw ContractError("a player cannot be paired with themselves");
    partner_[static_cast<std::size_t>(x)] = y;
    partner_[static_cast<std::size_t>(y)] = x;
    first_[static_cast<std::size_t>(x)] = 1;
  }
}

bool Pairing::respects(const PlayerSet& players) const {
  if (players.universe() != n_) return false;
  for (const auto& [x, y] : pairs_) {
    if (players.contains(x) != players.contains(y)) return false;
  }
  return true;
}

Pairing canonical_pairing(int n) {
  if (n < 2 || n % 2 != 0) throw ContractError("canonical_pairing needs an even n >= 2, got " + std::to_string(n));
  std::vector<PlayerPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n / 2));
  for (int p = 1; p < n; p += 2) pairs.push_back({p, p + 1});
  return Pairing(n, std::move(pairs));
}

Color pairing_guess(const Pairing& pairing, const VisibleView& view) {
  const int self = view.observer();
  const Color seen = view[pairing.partner(self)];
  return pairing.is_first(self) ? seen : complement(seen);
}

namespace {

class PairingStrategy final : public StrategyProfile {
 public:
  explicit PairingStrategy(Pairing pairing) : StrategyProfile("pairing", pairing.n()), pairing_(std::move(pairing)) {}

  Color guess(const VisibleView& view) const override { return pairing_guess(pairing_, view); }

 private:
  Pairing pairing_;
};

}  // namespace

ProfilePtr pairing_strategy(const Pairing& pairing) { return std::make_shared<PairingStrategy>(pairing); }

}  // namespace hatgame
