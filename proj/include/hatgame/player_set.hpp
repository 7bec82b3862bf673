#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hatgame {

// Subset of the players [n], stored one bit per player (bit p-1 for player p).
class PlayerSet {
 public:
  PlayerSet() = default;
  explicit PlayerSet(int n);

  // Players first..last inclusive, 1-based.
  static PlayerSet range(int n, int first, int last);
  static PlayerSet of(int n, std::span<const int> players);

  int universe() const { return n_; }
  bool contains(int p) const;
  void insert(int p);
  void erase(int p);
  void toggle(int p);

  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;
  PlayerSet complement() const;

  // |this ∩ other|; both sets must share a universe.
  int intersection_size(const PlayerSet& other) const;
  // Members of this set within first..last inclusive.
  int count_in_range(int first, int last) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const PlayerSet&, const PlayerSet&) = default;

 private:
  void check(int p) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hatgame
