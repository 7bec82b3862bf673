#pragma once

#include "hatgame/strategy.hpp"

namespace hatgame {

// Guess the color seen more often among the other n-1 hats; `tie_break` on
// equality.
Color majority_guess(const VisibleView& view, Color tie_break);

ProfilePtr majority_strategy(int n, Color tie_break = Color::Red);

}  // namespace hatgame
