#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcgame/game.hpp"

namespace mcgame {

// Capacity induced by v on the unit cell based at q:
//   mu_q(A) = v((q+1)_A, q_{-A}) - v(q).
struct SectionCapacity {
  LatticePoint base_cell;
  // Indexed by coalition bitmask; weights[0] == 0.
  std::vector<double> weights;

  double weight(Coalition A) const { return weights[A.bits()]; }
  int n() const { return base_cell.size(); }
  // The capacity as a k = 1 game (bitmask order is the k = 1 encoding).
  MultichoiceGame as_game() const;
};

SectionCapacity section_capacity(const MultichoiceGame& v, const LatticePoint& q);

// Classical Choquet integral of w in [0,1]^n with respect to mu, by the
// ascending-sort formula.
double choquet_capacity(const SectionCapacity& mu, std::span<const double> w);

// Choquet integral of a k-ary capacity at z in [0,k]^n. The cell is
// q_i = min(floor(z_i), k - 1).
double choquet_kary(const MultichoiceGame& v, std::span<const double> z);

// Same value computed in a caller-chosen cell q with q <= z <= q + 1.
double choquet_kary_in_cell(const MultichoiceGame& v, std::span<const double> z,
                            const LatticePoint& q);

// Moebius masses m(A) = sum_{B subset A} (-1)^{|A \ B|} mu(B).
std::vector<double> mobius_transform(std::span<const double> set_function);

// Classical interaction of T in every cell q in {0..k-1}^N, in canonical
// order of q with radix k.
std::vector<double> cellsum_contributions(const MultichoiceGame& v, Coalition T,
                                          const Limits& limits = {});

// Sum of cellsum_contributions.
double interaction_cellsum(const MultichoiceGame& v, Coalition T, const Limits& limits = {});

struct IntegralEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Monte-Carlo estimate of the integral of the mixed partial of C_v over
// [0,k]^n, taken cell by cell as
//   int_{[0,1]^{n-t}} sum_{A subset T} (-1)^{t-a} C_v(x_T + 1_A, x_{-T} + u) du.
// Samples are split evenly over the k^n cells; each cell draws from its own
// stream seeded from (seed, cell index).
IntegralEstimate integral_check(const MultichoiceGame& v, Coalition T, std::int64_t samples,
                                std::uint64_t seed, const Limits& limits = {});

}  // namespace mcgame
