#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mcgame/lattice.hpp"

namespace mcgame {

// A multichoice game v : {0..k}^N -> R with v(0_N) = 0, stored densely in
// little-endian mixed-radix order (attribute 0 varies fastest).
//
// Instances are immutable once constructed and safe to share between threads.
class MultichoiceGame {
 public:
  // Validates the table length and that values[0] is exactly 0.
  MultichoiceGame(int n, int k, std::vector<double> values, const Limits& limits = {});

  // Tabulates f over the lattice; f(0_N) must be 0.
  static MultichoiceGame from_function(int n, int k,
                                       const std::function<double(const LatticePoint&)>& f,
                                       const Limits& limits = {});

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

  // Offset of one step along attribute i.
  std::uint64_t stride(int i) const { return strides_[i]; }

  double at(std::uint64_t index) const { return values_[index]; }
  double value(const LatticePoint& x) const;
  double operator()(const LatticePoint& x) const { return value(x); }

  // v(k_N).
  double top() const { return values_.back(); }

 private:
  int n_;
  int k_;
  std::vector<double> values_;
  std::vector<std::uint64_t> strides_;
};

enum class GameKind { general, monotone, additive };

// Delta_T v(x) = sum_{A subset T} (-1)^{t-a} v(x + 1_A). Requires T nonempty
// and x_i < k for i in T.
double discrete_derivative(const MultichoiceGame& v, Coalition T, const LatticePoint& x);

// Uniform extension of a game given over prod_i {0..k_i}: k = max k_i and
// v'(x) = v(min(x_i, k_i)). raw_values is in the mixed-radix order with
// radices k_i + 1.
MultichoiceGame extend_heterogeneous(std::span<const double> raw_values,
                                     std::span<const int> k_list,
                                     const Limits& limits = {});

// Monotone along every +1_i step (within -tol) and |v(k_N) - 1| <= tol.
bool is_kary_capacity(const MultichoiceGame& v, double tol);

// v^{-S}(x_{-S}) = v(x_{-S}, 0_S), on N \ S in ascending attribute order.
MultichoiceGame restrict_absent(const MultichoiceGame& v, Coalition S);

// v_i^{-i}(x_{-i}) = v(x_{-i}, k_i) - v(0_{-i}, k_i).
MultichoiceGame restrict_present_top(const MultichoiceGame& v, int i);

// Game in which the members of A move in lockstep as one macro attribute
// [A] while T \ A stays at level 0.
struct ReducedGame {
  MultichoiceGame game;
  // Original index of each ordinary attribute of `game`, ascending.
  std::vector<int> kept;
  // Original members of the macro attribute, which is `game`'s last one.
  Coalition macro;
};

ReducedGame reduce_group(const MultichoiceGame& v, Coalition T, Coalition A);

// Deterministic pseudo-random game for a given seed.
//   general:  v(x) uniform in [-1, 1] off the origin
//   monotone: cumulated nonnegative masses rescaled to v(k_N) = 1
//   additive: v(x) = sum_i w_i x_i with w_i uniform in [0, 1]
MultichoiceGame random_game(std::uint64_t seed, int n, int k, GameKind kind,
                            const Limits& limits = {});

// (sigma o v)(sigma(x)) = v(x), where sigma(x)_{sigma(i)} = x_i.
MultichoiceGame permute_attributes(const MultichoiceGame& v, std::span<const int> sigma);

// Pointwise v + alpha * w on identical lattices.
MultichoiceGame combine(const MultichoiceGame& v, double alpha, const MultichoiceGame& w);

}  // namespace mcgame
