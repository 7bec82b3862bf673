#pragma once

#include "hatgame/analysis/bigint.hpp"

namespace hatgame {

BigInt binomial(int n, int k);

// Σ_{0<=i<=n, i != n/2} C(n,i)·max(i, n-i) against 2^n·n/2, in exact integers.
struct IdentityResult {
  int n;
  BigInt lhs;
  BigInt rhs;
  bool equal;
};

IdentityResult identity_check(int n);

// sqrt(n/(2π))·exp(-1/(3n)) - 1: no strategy has a smaller worst-case loss.
// Negative (vacuous) for small n; reported as is.
double lower_bound_loss(int n);

// C(n, n/2) against the Robbins-type estimate 2^n·sqrt(2/(πn))·exp(-1/(3n)).
struct RobbinsResult {
  int n;
  BigInt central;  // exact C(n, n/2)
  double estimate;
  bool holds;
};

inline constexpr int kMaxRobbinsN = 64;

RobbinsResult robbins_check(int n);

}  // namespace hatgame
