#include "hatgame/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

int ceil_even(int num, int den) {
  const int q = num / den;
  const bool exact = num % den == 0;
  if (exact) return q % 2 == 0 ? q : q + 1;
  return (q + 1) % 2 == 0 ? q + 1 : q + 2;
}

int floor_even(int num, int den) {
  const int q = num / den;
  return q % 2 == 0 ? q : q - 1;
}

void PartitionPlan::check_block(int block) const {
  if (block < 1 || block > k) {
    throw ContractError("block index " + std::to_string(block) + " outside [1, " + std::to_string(k) + "]");
  }
}

int PartitionPlan::first(int block) const {
  check_block(block);
  int start = 1;
  for (int j = 0; j < block - 1; ++j) start += block_sizes[static_cast<std::size_t>(j)];
  return start;
}

int PartitionPlan::last(int block) const { return first(block) + block_sizes[static_cast<std::size_t>(block - 1)] - 1; }

int PartitionPlan::block_of(int player) const {
  if (player < 1 || player > n) throw ContractError("player outside the plan");
  int end = 0;
  for (int j = 0; j < k; ++j) {
    end += block_sizes[static_cast<std::size_t>(j)];
    if (player <= end) return j + 1;
  }
  return k;
}

int PartitionPlan::max_block_size() const { return *std::max_element(block_sizes.begin(), block_sizes.end()); }

PlayerSet PartitionPlan::block_set(int block) const { return PlayerSet::range(n, first(block), last(block)); }

std::vector<int> PartitionPlan::block_members(int block) const {
  std::vector<int> out;
  for (int p = first(block); p <= last(block); ++p) out.push_back(p);
  return out;
}

PartitionPlan make_partition(int n) {
  if (n < 2 || n % 2 != 0) throw ContractError("make_partition needs an even n >= 2, got " + std::to_string(n));
  if (n <= 4) return PartitionPlan{n, 1, 1, {n}, canonical_pairing(n)};

  // Least k with 4k^3 >= n, i.e. ceil(cbrt(n/4)) without floating point.
  int k = 1;
  while (4LL * k * k * k < n) ++k;
  k = std::max(k, 2);

  const int hi = ceil_even(n, k);
  const int lo = floor_even(n, k);
  // n = l*hi + (k-l)*lo; with hi = lo + 2 this is n = k*lo + 2l.
  const int l = hi == lo ? k : (n - k * lo) / 2;

  std::vector<int> sizes(static_cast<std::size_t>(k), lo);
  std::fill_n(sizes.begin(), l, hi);
  return PartitionPlan{n, k, l, std::move(sizes), canonical_pairing(n)};
}

Thresholds compute_thresholds(int outside_reds, const PartitionPlan& plan, int block) {
  if (block < 1 || block > plan.k) {
    throw ContractError("block index " + std::to_string(block) + " outside [1, " + std::to_string(plan.k) + "]");
  }
  const int size = plan.block_sizes[static_cast<std::size_t>(block - 1)];
  const int k = plan.k;
  const int target = block % k;
  int b = (size + 1) / 2;
  while ((outside_reds + b) % k != target) ++b;
  return {b - k - 1, b};
}

Thresholds compute_thresholds(const VisibleView& view, const PartitionPlan& plan, int block) {
  const int lo = plan.first(block);
  const int hi = plan.last(block);
  if (view.observer() < lo || view.observer() > hi) {
    throw ContractError("thresholds of a block are computed by its own members");
  }
  const int outside = view.count_red(1, plan.n) - view.count_red(lo, hi);
  return compute_thresholds(outside, plan, block);
}

GuaranteeBound guarantee_bound(int n) {
  if (n < 2) throw ContractError("guarantee_bound needs n >= 2");
  const double growth = 1.2 * std::pow(static_cast<double>(n), 2.0 / 3.0);
  return {n, std::nullopt, growth + 1.0, growth + 2.0};
}

GuaranteeBound guarantee_bound(int n, const PartitionPlan& plan) {
  GuaranteeBound bound = guarantee_bound(n);
  bound.structural_loss = plan.max_block_size() / 2 + (plan.k - 1) * (plan.k - 1);
  return bound;
}

}  // namespace hatgame
