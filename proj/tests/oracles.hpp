#pragma once

// Test-only reference implementations. These are written straight from the
// game rules with plain vectors and loops, and deliberately share no code
// with the library's strategy path.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// 'R' / 'B' per player, player 1 at index 0.
using Hats = std::string;

// Lexicographic order with R < B, player 1 most significant.
inline Hats hats_from_index(int n, std::uint64_t x) {
  Hats h(static_cast<std::size_t>(n), 'R');
  for (int p = 0; p < n; ++p) {
    if ((x >> (n - 1 - p)) & 1U) h[static_cast<std::size_t>(p)] = 'B';
  }
  return h;
}

inline char flip(char c) { return c == 'R' ? 'B' : 'R'; }

inline int reds(const Hats& h, int first, int last) {  // 1-based inclusive
  int r = 0;
  for (int p = first; p <= last; ++p) r += h[static_cast<std::size_t>(p - 1)] == 'R' ? 1 : 0;
  return r;
}

inline int target(const Hats& h) {
  const int r = reds(h, 1, static_cast<int>(h.size()));
  return std::max(r, static_cast<int>(h.size()) - r);
}

struct Plan {
  int k = 0;
  std::vector<int> sizes;
};

// k from floating-point cube root; block sizes by trying every l.
inline Plan plan(int n) {
  if (n <= 4) return {1, {n}};
  int k = static_cast<int>(std::ceil(std::cbrt(n / 4.0) - 1e-12));
  k = std::max(k, 2);
  const double q = static_cast<double>(n) / k;
  int hi = static_cast<int>(std::ceil(q));
  if (hi % 2 != 0) ++hi;
  int lo = static_cast<int>(std::floor(q));
  if (lo % 2 != 0) --lo;
  for (int l = 1; l <= k; ++l) {
    if (l * hi + (k - l) * lo == n) {
      if (hi == lo && l != k) continue;
      std::vector<int> sizes(static_cast<std::size_t>(k), lo);
      for (int i = 0; i < l; ++i) sizes[static_cast<std::size_t>(i)] = hi;
      return {k, sizes};
    }
  }
  return {};
}

// Smallest b >= size/2 with outside + b ≡ block (mod k), by plain search.
inline int threshold_b(int outside, int size, int k, int block) {
  for (int b = size / 2;; ++b) {
    if (((outside + b) - block) % k == 0) return b;
  }
}

// Composite guesses for every player, computed by looking only at the hats
// each player is allowed to see.
inline std::string composite_guesses(const Hats& h) {
  const int n = static_cast<int>(h.size());
  const int m = n % 2 == 0 ? n : n - 1;
  const Plan pl = plan(m);
  std::string out(static_cast<std::size_t>(n), '?');
  for (int self = 1; self <= n; ++self) {
    // What `self` sees: everyone else.
    auto seen = [&](int p) { return h[static_cast<std::size_t>(p - 1)]; };
    if (self > m) {
      int r = 0;
      int b = 0;
      for (int p = 1; p <= n; ++p) {
        if (p == self) continue;
        (seen(p) == 'R' ? r : b) += 1;
      }
      out[static_cast<std::size_t>(self - 1)] = r >= b ? 'R' : 'B';
      continue;
    }
    const int partner = self % 2 == 1 ? self + 1 : self - 1;
    const char pairing = self % 2 == 1 ? seen(partner) : flip(seen(partner));
    if (pl.k == 1) {
      out[static_cast<std::size_t>(self - 1)] = pairing;
      continue;
    }
    int start = 1;
    int block = 1;
    while (self >= start + pl.sizes[static_cast<std::size_t>(block - 1)]) {
      start += pl.sizes[static_cast<std::size_t>(block - 1)];
      ++block;
    }
    const int end = start + pl.sizes[static_cast<std::size_t>(block - 1)] - 1;
    int inside = 0;
    int outside = 0;
    for (int p = 1; p <= m; ++p) {
      if (p == self || seen(p) != 'R') continue;
      (p >= start && p <= end ? inside : outside) += 1;
    }
    const int b = threshold_b(outside, end - start + 1, pl.k, block);
    const int a = b - pl.k - 1;
    char g = pairing;
    if (inside >= b) g = 'R';
    else if (inside <= a) g = 'B';
    out[static_cast<std::size_t>(self - 1)] = g;
  }
  return out;
}

inline int correct(const Hats& h, const std::string& guesses) {
  int c = 0;
  for (std::size_t i = 0; i < h.size(); ++i) c += h[i] == guesses[i] ? 1 : 0;
  return c;
}

}  // namespace oracle
