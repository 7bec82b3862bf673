#include "hatgame/distribution.hpp"

#include <algorithm>

#include "hatgame/errors.hpp"

namespace hatgame {

HatDistribution::HatDistribution(int n) : reds_(n) {}

HatDistribution::HatDistribution(std::span<const Color> colors) : reds_(static_cast<int>(colors.size())) {
  if (colors.empty()) throw EncodingError("a hat distribution needs at least one player");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == Color::Red) {
      reds_.insert(static_cast<int>(i) + 1);
      ++red_count_;
    }
  }
}

HatDistribution HatDistribution::parse(std::string_view text) {
  if (text.empty()) throw EncodingError("empty distribution string");
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'R': colors.push_back(Color::Red); break;
      case 'B': colors.push_back(Color::Blue); break;
      default:
        throw EncodingError("invalid character '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i + 1) + "; expected R or B");
    }
  }
  return HatDistribution(colors);
}

HatDistribution HatDistribution::uniform(int n, Color c) {
  if (n < 1) throw ContractError("a hat distribution needs at least one player");
  HatDistribution d(n);
  if (c == Color::Red) {
    d.reds_ = PlayerSet::range(n, 1, n);
    d.red_count_ = n;
  }
  return d;
}

HatDistribution HatDistribution::from_index(int n, std::uint64_t index) {
  if (n < 1 || n > 63) throw ContractError("from_index supports 1 <= n <= 63");
  HatDistribution d(n);
  d.assign_index(index);
  return d;
}

void HatDistribution::assign_index(std::uint64_t index) {
  const int players = n();
  if (players > 63 || (index >> players) != 0) throw ContractError("distribution index out of range");
  // Player p is blue iff bit (n - p) of the index is set.
  std::uint64_t red_bits = 0;
  for (int p = 1; p <= players; ++p) {
    if (((index >> (players - p)) & 1U) == 0) red_bits |= std::uint64_t{1} << (p - 1);
  }
  reds_.words()[0] = red_bits;
  red_count_ = reds_.size();
}

std::uint64_t HatDistribution::index() const {
  const int players = n();
  if (players > 63) throw ContractError("index() supports n <= 63");
  std::uint64_t index = 0;
  for (int p = 1; p <= players; ++p) {
    if (!reds_.contains(p)) index |= std::uint64_t{1} << (players - p);
  }
  return index;
}

Color HatDistribution::operator[](int p) const {
  if (p < 1 || p > n()) throw ContractError("player index outside [1, n]");
  return reds_.contains(p) ? Color::Red : Color::Blue;
}

void HatDistribution::set(int p, Color c) {
  if ((*this)[p] != c) flip(p);
}

void HatDistribution::flip(int p) {
  reds_.toggle(p);
  red_count_ += reds_.contains(p) ? 1 : -1;
}

std::string HatDistribution::to_string() const {
  std::string out(static_cast<std::size_t>(n()), 'B');
  for (int p : reds_.members()) out[static_cast<std::size_t>(p - 1)] = 'R';
  return out;
}

std::vector<Color> HatDistribution::colors() const {
  std::vector<Color> out(static_cast<std::size_t>(n()), Color::Blue);
  for (int p : reds_.members()) out[static_cast<std::size_t>(p - 1)] = Color::Red;
  return out;
}

HatDistribution make_distribution(std::span<const Color> colors) { return HatDistribution(colors); }

HatDistribution decode(std::string_view text) { return HatDistribution::parse(text); }

std::string encode(const HatDistribution& omega) { return omega.to_string(); }

int majority_target(const HatDistribution& omega) { return std::max(omega.red_count(), omega.blue_count()); }

VisibleView::VisibleView(const HatDistribution& omega, int observer) : omega_(&omega), observer_(observer) {
  if (observer < 1 || observer > omega.n()) throw ContractError("observer outside [1, n]");
}

Color VisibleView::operator[](int p) const {
  if (p == observer_) throw PeekError("player " + std::to_string(p) + " cannot see their own hat");
  if (p < 1 || p > n()) throw ContractError("player index outside [1, n]");
  return (*omega_)[p];
}

}  // namespace hatgame
