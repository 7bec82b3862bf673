#include "hatgame/player_set.hpp"

#include <bit>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int n) { return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits); }

// Mask of bits lo..hi (inclusive) within one word.
std::uint64_t span_mask(int lo, int hi) {
  const std::uint64_t upper = hi == kWordBits - 1 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
  return upper & (~std::uint64_t{0} << lo);
}

}  // namespace

PlayerSet::PlayerSet(int n) : n_(n), words_(word_count(n), 0) {
  if (n < 0) throw ContractError("player count must be non-negative");
}

PlayerSet PlayerSet::range(int n, int first, int last) {
  PlayerSet s(n);
  if (first > last) return s;
  s.check(first);
  s.check(last);
  const int lo = first - 1;
  const int hi = last - 1;
  for (int w = lo / kWordBits; w <= hi / kWordBits; ++w) {
    const int from = w == lo / kWordBits ? lo % kWordBits : 0;
    const int to = w == hi / kWordBits ? hi % kWordBits : kWordBits - 1;
    s.words_[static_cast<std::size_t>(w)] |= span_mask(from, to);
  }
  return s;
}

PlayerSet PlayerSet::of(int n, std::span<const int> players) {
  PlayerSet s(n);
  for (int p : players) s.insert(p);
  return s;
}

void PlayerSet::check(int p) const {
  if (p < 1 || p > n_) {
    throw ContractError("player index " + std::to_string(p) + " outside [1, " + std::to_string(n_) + "]");
  }
}

bool PlayerSet::contains(int p) const {
  if (p < 1 || p > n_) return false;
  const int b = p - 1;
  return (words_[static_cast<std::size_t>(b / kWordBits)] >> (b % kWordBits)) & 1U;
}

void PlayerSet::insert(int p) {
  check(p);
  const int b = p - 1;
  words_[static_cast<std::size_t>(b / kWordBits)] |= std::uint64_t{1} << (b % kWordBits);
}

void PlayerSet::erase(int p) {
  check(p);
  const int b = p - 1;
  words_[static_cast<std::size_t>(b / kWordBits)] &= ~(std::uint64_t{1} << (b % kWordBits));
}

void PlayerSet::toggle(int p) {
  check(p);
  const int b = p - 1;
  words_[static_cast<std::size_t>(b / kWordBits)] ^= std::uint64_t{1} << (b % kWordBits);
}

int PlayerSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> PlayerSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(bits) + 1);
    }
  }
  return out;
}

PlayerSet PlayerSet::complement() const {
  PlayerSet all = range(n_, 1, n_);
  for (std::size_t w = 0; w < words_.size(); ++w) all.words_[w] &= ~words_[w];
  return all;
}

int PlayerSet::intersection_size(const PlayerSet& other) const {
  if (other.n_ != n_) throw ContractError("player sets over different universes");
  int total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) total += std::popcount(words_[w] & other.words_[w]);
  return total;
}

int PlayerSet::count_in_range(int first, int last) const {
  if (first > last) return 0;
  check(first);
  check(last);
  const int lo = first - 1;
  const int hi = last - 1;
  int total = 0;
  for (int w = lo / kWordBits; w <= hi / kWordBits; ++w) {
    const int from = w == lo / kWordBits ? lo % kWordBits : 0;
    const int to = w == hi / kWordBits ? hi % kWordBits : kWordBits - 1;
    total += std::popcount(words_[static_cast<std::size_t>(w)] & span_mask(from, to));
  }
  return total;
}

}  // namespace hatgame
