#include "hatgame/majority.hpp"

#include "hatgame/errors.hpp"

namespace hatgame {

Color majority_guess(const VisibleView& view, Color tie_break) {
  const int reds = view.red_count();
  const int blues = view.n() - 1 - reds;
  if (reds == blues) return tie_break;
  return reds > blues ? Color::Red : Color::Blue;
}

namespace {

class MajorityStrategy final : public StrategyProfile {
 public:
  MajorityStrategy(int n, Color tie_break) : StrategyProfile("majority", n), tie_break_(tie_break) {}

  Color guess(const VisibleView& view) const override { return majority_guess(view, tie_break_); }

 private:
  Color tie_break_;
};

}  // namespace

ProfilePtr majority_strategy(int n, Color tie_break) {
  if (n < 2) throw ContractError("majority strategy needs n >= 2");
  return std::make_shared<MajorityStrategy>(n, tie_break);
}

}  // namespace hatgame
