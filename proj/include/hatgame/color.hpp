#pragma once

#include <cstdint>

namespace hatgame {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color complement(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr char to_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

}  // namespace hatgame
