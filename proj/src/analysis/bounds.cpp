#include "hatgame/analysis/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

BigInt binomial(int n, int k) {
  if (n < 0) throw ContractError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  // Each prefix product is itself a binomial, so the division is exact.
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

IdentityResult identity_check(int n) {
  if (n < 0 || n % 2 != 0) throw ContractError("identity_check needs an even n >= 0, got " + std::to_string(n));
  BigInt lhs = 0;
  for (int i = 0; i <= n; ++i) {
    if (2 * i == n) continue;
    lhs += binomial(n, i) * std::max(i, n - i);
  }
  BigInt rhs = (BigInt(1) << n) * (n / 2);
  const bool equal = lhs == rhs;
  return {n, std::move(lhs), std::move(rhs), equal};
}

double lower_bound_loss(int n) {
  if (n < 1) throw ContractError("lower_bound_loss needs n >= 1");
  const double x = static_cast<double>(n);
  return std::sqrt(x / (2.0 * std::numbers::pi)) * std::exp(-1.0 / (3.0 * x)) - 1.0;
}

RobbinsResult robbins_check(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxRobbinsN) {
    throw ContractError("robbins_check needs an even n in [2, " + std::to_string(kMaxRobbinsN) + "], got " +
                        std::to_string(n));
  }
  const double x = static_cast<double>(n);
  const double estimate = std::ldexp(std::sqrt(2.0 / (std::numbers::pi * x)) * std::exp(-1.0 / (3.0 * x)), n);
  BigInt central = binomial(n, n / 2);
  const bool holds = central.convert_to<double>() >= estimate;
  return {n, std::move(central), estimate, holds};
}

}  // namespace hatgame
