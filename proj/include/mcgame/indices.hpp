#pragma once

#include <vector>

#include "mcgame/game.hpp"
#include "mcgame/rational.hpp"

namespace mcgame {

// (n - s - t)! kap! / (n - s + kap - t + 1)!, the weight of a profile x_{-T}
// with s = |support(x_{-T})| and kap = |kernel(x_{-T})|.
// Requires t >= 1 and 0 <= kap <= s <= n - t.
Rational shapley_coefficient(int n, int t, int s, int kap);

// The same weights for every (s, kap) class with 0 <= kap <= s <= n - t,
// flattened as s * (n - t + 1) + kap and converted to double.
std::vector<double> coefficient_table(int n, int t);

// Importance index of attribute i:
//   phi_i = sum_{x_{-i}} c(s, kap) (v(x_{-i}, k) - v(x_{-i}, 0)).
double importance(const MultichoiceGame& v, int i, const Limits& limits = {});

// Interaction index of T in closed form: the coefficient-weighted
// alternating sum over the corners {0, k}^T for every profile x_{-T}.
// For a singleton this is importance(v, i) bit for bit.
double interaction(const MultichoiceGame& v, Coalition T, const Limits& limits = {});

// Interaction as the weighted sum of unit-cell derivatives Delta_T v(z) over
// z with z_T < k_T. Independent of `interaction`'s corner sums.
double interaction_via_derivatives(const MultichoiceGame& v, Coalition T,
                                   const Limits& limits = {});

// Interaction through the group-reduction expansion
//   I(T) = sum_{0 != A subset T} (-1)^{t-a} phi_[A](v_[A]).
double interaction_recursive(const MultichoiceGame& v, Coalition T,
                             const Limits& limits = {});

// Classical indices for k = 1 games, by direct subset enumeration.
double classical_shapley(const MultichoiceGame& v, int i);
double classical_interaction(const MultichoiceGame& v, Coalition S);

// Lattice-point interaction: J = support(x), sum over y with y_J = x_J - 1
// and y_l in {0, k} elsewhere of alpha(h(y)) Delta_J v(y), where h(y) counts
// components of y at level k and alpha(h) = (n-j-h)! h! / (n-j+1)!.
double lattice_point_interaction(const MultichoiceGame& v, const LatticePoint& x);

// sum over x < k_N of v(x + 1_N) - v(x).
double efficiency_rhs(const MultichoiceGame& v);

}  // namespace mcgame
