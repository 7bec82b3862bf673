#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hatgame/color.hpp"
#include "hatgame/player_set.hpp"

namespace hatgame {

// An assignment of hat colors to players 1..n. Text form is a string over
// {R, B} with player 1 leftmost.
class HatDistribution {
 public:
  explicit HatDistribution(std::span<const Color> colors);

  static HatDistribution parse(std::string_view text);
  static HatDistribution uniform(int n, Color c);

  // Position `index` in the lexicographic order of {R,B}^n with R < B, so
  // player 1 is the most significant digit and index 0 is all-red.
  // Requires n <= 63.
  static HatDistribution from_index(int n, std::uint64_t index);
  void assign_index(std::uint64_t index);
  std::uint64_t index() const;

  int n() const { return reds_.universe(); }
  Color operator[](int p) const;

  int red_count() const { return red_count_; }
  int blue_count() const { return n() - red_count_; }
  int count_red(const PlayerSet& players) const { return reds_.intersection_size(players); }
  int count_red(int first, int last) const { return reds_.count_in_range(first, last); }
  const PlayerSet& reds() const { return reds_; }

  void set(int p, Color c);
  void flip(int p);

  std::string to_string() const;
  std::vector<Color> colors() const;

  friend bool operator==(const HatDistribution&, const HatDistribution&) = default;

 private:
  explicit HatDistribution(int n);

  PlayerSet reds_;
  int red_count_ = 0;
};

HatDistribution make_distribution(std::span<const Color> colors);
HatDistribution decode(std::string_view text);
std::string encode(const HatDistribution& omega);

// max{|R_ω|, |B_ω|}: what the majority strategy scores off balance.
int majority_target(const HatDistribution& omega);

// What player `observer` sees: every hat except their own. Reading the
// observer's position throws PeekError. Non-owning; the distribution must
// outlive the view.
class VisibleView {
 public:
  VisibleView(const HatDistribution& omega, int observer);

  int n() const { return omega_->n(); }
  int observer() const { return observer_; }

  Color operator[](int p) const;

  // Reds among all visible hats.
  int red_count() const { return omega_->red_count() - own_red(); }
  // Reds among the visible members of `players` / of first..last.
  int count_red(const PlayerSet& players) const {
    return omega_->count_red(players) - (players.contains(observer_) ? own_red() : 0);
  }
  int count_red(int first, int last) const {
    return omega_->count_red(first, last) - (first <= observer_ && observer_ <= last ? own_red() : 0);
  }

 private:
  // Only ever subtracted from a total that includes the observer, so no
  // count exposed by the view depends on the observer's hat.
  int own_red() const { return omega_->reds().contains(observer_) ? 1 : 0; }

  const HatDistribution* omega_;
  int observer_;
};

}  // namespace hatgame
