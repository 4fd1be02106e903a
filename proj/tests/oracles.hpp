#pragma once

// Brute-force reference computations used only by tests. Each one follows a
// textbook definition directly and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mcgame/game.hpp"
#include "mcgame/rational.hpp"

namespace mcgame::oracle {

// v(x) = min(x_1, x_2) on {0,1,2}^2.
inline MultichoiceGame min_game(double scale = 1.0) {
  return MultichoiceGame::from_function(
      2, 2, [scale](const LatticePoint& x) { return scale * std::min(x[0], x[1]); });
}

inline MultichoiceGame additive_game(int n, int k) {
  return MultichoiceGame::from_function(n, k, [](const LatticePoint& x) {
    double s = 0;
    for (int level : x) s += level;
    return s;
  });
}

// k = 1 unanimity game of coalition `members`.
inline MultichoiceGame unanimity(int n, std::uint32_t members) {
  return MultichoiceGame::from_function(n, 1, [members](const LatticePoint& x) {
    for (int i = 0; i < x.size(); ++i) {
      if (((members >> i) & 1u) && x[i] == 0) return 0.0;
    }
    return 1.0;
  });
}

// k = 1 game from a set function indexed by bitmask.
inline MultichoiceGame binary_game(int n, std::vector<double> by_mask) {
  return MultichoiceGame(n, 1, std::move(by_mask));
}

inline LatticePoint plus_unit(LatticePoint x, int i) {
  x[i] += 1;
  return x;
}

// Delta_T v(x) = Delta_i (Delta_{T \ i} v)(x), by recursion on the lowest member.
inline double derivative_recursive(const MultichoiceGame& v, std::vector<int> T,
                                   const LatticePoint& x) {
  if (T.empty()) return v(x);
  const int i = T.back();
  T.pop_back();
  return derivative_recursive(v, T, plus_unit(x, i)) - derivative_recursive(v, T, x);
}

inline Rational rational_factorial(int n) {
  Rational r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

// Shapley value as the average marginal contribution over all n! orders.
inline double shapley_by_permutations(const MultichoiceGame& v, int i) {
  const int n = v.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double total = 0.0;
  long count = 0;
  do {
    std::uint32_t before = 0;
    for (int j : order) {
      if (j == i) break;
      before |= 1u << j;
    }
    total += v.at(before | (1u << i)) - v.at(before);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

// Classical interaction through the Moebius representation:
//   I(S) = sum_{T superset S} m(T) / (t - s + 1).
inline double interaction_by_mobius(const MultichoiceGame& v, std::uint32_t S) {
  const int n = v.n();
  const std::uint32_t full = (1u << n) - 1u;
  double total = 0.0;
  for (std::uint32_t T = 0; T <= full; ++T) {
    if ((T & S) != S) continue;
    double m = 0.0;
    for (std::uint32_t B = 0; B <= T; ++B) {
      if ((B & T) != B) continue;
      const int diff = __builtin_popcount(T & ~B);
      m += (diff % 2 ? -1.0 : 1.0) * v.at(B);
    }
    total += m / (__builtin_popcount(T) - __builtin_popcount(S) + 1);
  }
  return total;
}

// Direct evaluation of the closed-form interaction: every profile x_{-T} is
// decoded, its corners looked up pointwise and its weight built from
// factorials on the spot.
inline double interaction_direct(const MultichoiceGame& v, std::uint32_t T) {
  const int n = v.n();
  const int k = v.k();
  const int t = __builtin_popcount(T);
  double total = 0.0;
  for (std::uint64_t idx = 0; idx < v.size(); ++idx) {
    const LatticePoint x = decode_index(idx, n, k);
    bool profile = true;
    int s = 0;
    int kap = 0;
    for (int i = 0; i < n; ++i) {
      if ((T >> i) & 1u) {
        profile = profile && x[i] == 0;
      } else {
        s += x[i] > 0;
        kap += x[i] == k;
      }
    }
    if (!profile) continue;
    const Rational w =
        rational_factorial(n - s - t) * rational_factorial(kap) / rational_factorial(n - s + kap - t + 1);
    double corners = 0.0;
    for (std::uint32_t A = 0; A <= T; ++A) {
      if ((A & T) != A) continue;
      LatticePoint y = x;
      for (int i = 0; i < n; ++i) {
        if ((A >> i) & 1u) y[i] = k;
      }
      corners += ((t - __builtin_popcount(A)) % 2 ? -1.0 : 1.0) * v(y);
    }
    total += w.convert_to<double>() * corners;
  }
  return total;
}

}  // namespace mcgame::oracle
