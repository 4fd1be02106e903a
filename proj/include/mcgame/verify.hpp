#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgame/game.hpp"
#include "mcgame/rational.hpp"

namespace mcgame {

enum class Axiom { linearity, null_attribute, invariance, symmetry, efficiency, recursivity };

std::string_view axiom_name(Axiom a);  // "L", "N", "I", "S", "E", "R"
std::optional<Axiom> parse_axiom(std::string_view name);
std::vector<Axiom> all_axioms();

struct AxiomCheck {
  std::uint64_t seed = 0;
  // Coalition or attribute the check was about, 1-based label.
  std::string subject;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct VerificationReport {
  std::string axiom;
  int trials = 0;
  int checks = 0;
  double tolerance = 0.0;
  double max_gap = 0.0;
  // Check that attained max_gap.
  std::optional<AxiomCheck> worst;
  std::vector<AxiomCheck> failures;
  bool passed = true;
  std::string note;
};

// v' on n + 1 attributes with attribute `position` null:
// v'(x) = v(x with coordinate `position` removed).
MultichoiceGame make_null_extension(const MultichoiceGame& v, int position,
                                    const Limits& limits = {});

// w with w(x_{-i}, 0) = 0, w(x_{-i}, l) = v(x_{-i}, l+1) - v(x_{-i}, 1) for
// 1 <= l <= k-1 and w(x_{-i}, k) = v(x_{-i}, k) - v(x_{-i}, 0), so that
//   v(x+1_i) - v(x) = w(x) - w(x-1_i)       for 0 < x_i < k
//   v(x_{-i}, 1) - v(x_{-i}, 0) = w(x_{-i}, k) - w(x_{-i}, k-1).
// Requires k >= 2.
MultichoiceGame make_invariance_partner(const MultichoiceGame& v, int i);

// Runs `trials` seeded trials of one axiom on random games of shape (n, k).
// When `fixed` is given it replaces the random game v in every trial.
VerificationReport verify_axiom(Axiom axiom, int trials, std::uint64_t seed, int n, int k,
                                double tol, const MultichoiceGame* fixed = nullptr,
                                const Limits& limits = {});

// sum_{s=a}^{b} C(b-a, s-a) (n-s-1)! s! / n!.
Rational interval_weight_sum(int n, int a, int b);
// (n-b-1)! a! / (n-b+a)!.
Rational interval_weight_closed(int n, int a, int b);

// Exact check of interval_weight_sum == interval_weight_closed for all 0 <= a <= b < n.
VerificationReport check_interval_identity(int n);

}  // namespace mcgame
