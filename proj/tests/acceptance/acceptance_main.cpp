// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "mcgame/choquet.hpp"
#include "mcgame/indices.hpp"
#include "mcgame/simd/kernels.hpp"
#include "mcgame/verify.hpp"
#include "../oracles.hpp"

using namespace mcgame;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s  [%s, %.2fs]\n", id, o.pass ? "PASS" : "FAIL", title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace

int main() {
  std::printf("kernels: %s\n", std::string(simd::active_kernels().name).c_str());
  criterion(1, "singleton interaction equals importance bit for bit", [] {
    int games = 0, compared = 0, mismatched = 0;
    for (int g = 0; g < 50; ++g) {
      const int n = 1 + g % 3;
      const int k = 1 + (g / 3) % 2;
      const auto v = random_game(100 + g, n, k, GameKind::general);
      ++games;
      for (int i = 0; i < n; ++i) {
        ++compared;
        if (std::bit_cast<std::uint64_t>(interaction(v, Coalition::single(i))) !=
            std::bit_cast<std::uint64_t>(importance(v, i))) {
          ++mismatched;
        }
      }
      for (int t = 1; t <= n; ++t) {
        for (int s = 0; s <= n - t; ++s) {
          for (int kap = 0; kap <= s; ++kap) {
            if (t == 1 && shapley_coefficient(n, 1, s, kap) !=
                              Rational(factorial(n - s - 1) * factorial(kap), factorial(n + kap - s))) {
              ++mismatched;
            }
          }
        }
      }
    }
    return Outcome{mismatched == 0, fmt("games=%g pairs=%g mismatches=%g", games, compared, mismatched)};
  });

  criterion(2, "k = 1 reduces to classical Shapley and interaction", [] {
    double worst = 0.0;
    for (int g = 0; g < 100; ++g) {
      const int n = 1 + g % 6;
      const auto v = random_game(200 + g, n, 1, GameKind::general);
      for (int i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(importance(v, i) - oracle::shapley_by_permutations(v, i)));
        worst = std::max(worst, std::abs(importance(v, i) - classical_shapley(v, i)));
      }
      for (Coalition T : coalitions_up_to(n, n)) {
        const double mine = interaction(v, T);
        worst = std::max(worst, std::abs(mine - oracle::interaction_by_mobius(v, T.bits())));
        worst = std::max(worst, std::abs(mine - classical_interaction(v, T)));
      }
    }
    return Outcome{worst <= 1e-12, fmt("max_gap=%.3g tol=1e-12", worst)};
  });

  criterion(3, "closed form, derivative sum and recursion agree", [] {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int checks = 0;
    for (int g = 0; g < 100; ++g) {
      const int n = 1 + g % 5;
      const int k = 1 + (g / 5) % 3;
      const auto v = random_game(300 + g, n, k, GameKind::general);
      for (Coalition T : coalitions_up_to(n, std::min(n, 3))) {
        const double closed = interaction(v, T);
        worst = std::max(worst, std::abs(closed - interaction_via_derivatives(v, T)));
        worst = std::max(worst, std::abs(closed - interaction_recursive(v, T)));
        ++checks;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Outcome{worst <= 1e-9 && secs < 60.0,
                   fmt("coalitions=%g max_gap=%.3g tol=1e-9 runtime=%.2fs", checks, worst, secs)};
  });

  criterion(4, "axiom suite L N I S E R and efficiency hand values", [] {
    double worst = 0.0;
    int reports = 0;
    bool ok = true;
    for (Axiom a : all_axioms()) {
      for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
          const auto r = verify_axiom(a, 100, 42, n, k, 1e-9);
          ok = ok && r.passed && r.max_gap <= 1e-9;
          worst = std::max(worst, r.max_gap);
          ++reports;
        }
      }
    }
    const auto v = oracle::min_game();
    const double phi1 = importance(v, 0), phi2 = importance(v, 1), rhs = efficiency_rhs(v);
    ok = ok && std::abs(phi1 - 2) <= 1e-9 && std::abs(phi2 - 2) <= 1e-9 && std::abs(rhs - 4) <= 1e-9;
    return Outcome{ok, fmt("reports=%g max_gap=%.3g", reports, worst) +
                           fmt(" min game phi=[%g,%g] rhs=%g", phi1, phi2, rhs)};
  });

  criterion(5, "cell sum equals closed form", [] {
    double worst = 0.0;
    for (int g = 0; g < 50; ++g) {
      const int n = 1 + g % 4;
      const int k = 1 + (g / 4) % 3;
      const auto v = random_game(500 + g, n, k, GameKind::general);
      for (Coalition T : coalitions_up_to(n, n)) {
        worst = std::max(worst, std::abs(interaction_cellsum(v, T) - interaction(v, T)));
      }
    }
    const auto parts = cellsum_contributions(oracle::min_game(), Coalition{0, 1});
    const bool exact = parts == std::vector<double>{1, 0, 0, 1} &&
                       interaction_cellsum(oracle::min_game(), Coalition{0, 1}) == 2.0 &&
                       interaction(oracle::min_game(), Coalition{0, 1}) == 2.0;
    return Outcome{worst <= 1e-9 && exact,
                   fmt("max_gap=%.3g tol=1e-9", worst) + (exact ? " min game 1,0,0,1 -> 2" : " min game mismatch")};
  });

  criterion(6, "Monte-Carlo integral within 3 standard errors", [] {
    const auto start = std::chrono::steady_clock::now();
    std::vector<MultichoiceGame> games{oracle::min_game()};
    for (int g = 0; g < 10; ++g) {
      games.push_back(random_game(600 + g, 2 + g % 2, 1 + (g / 2) % 2, GameKind::monotone));
    }
    double worst_z = 0.0;
    int checks = 0;
    bool ok = true;
    for (std::size_t g = 0; g < games.size(); ++g) {
      const auto& v = games[g];
      std::vector<Coalition> sets{Coalition{0}, Coalition{0, 1}};
      if (v.n() == 3) sets.push_back(Coalition::full(3));
      for (Coalition T : sets) {
        const auto est = integral_check(v, T, 100000, 1 + g);
        const double gap = std::abs(est.estimate - interaction(v, T));
        const double z = est.std_error > 0 ? gap / est.std_error : (gap <= 1e-12 ? 0.0 : INFINITY);
        worst_z = std::max(worst_z, z);
        ok = ok && z <= 3.0;
        ++checks;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Outcome{ok && secs < 30.0, fmt("checks=%g max|z|=%.3f runtime=%.2fs", checks, worst_z, secs)};
  });

  criterion(7, "combinatorial identity in exact rationals", [] {
    int checks = 0;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      const auto r = check_interval_identity(n);
      ok = ok && r.passed;
      checks += r.checks;
    }
    return Outcome{ok, fmt("pairs=%g n<=10", checks)};
  });

  criterion(8, "Choquet interpolation and continuity", [] {
    double lattice_gap = 0.0, seam_gap = 0.0;
    int seams = 0;
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) {
        for (int g = 0; g < 5; ++g) {
          const auto v = random_game(800 + 100 * n + 10 * k + g, n, k, GameKind::general);
          for (std::int64_t idx = 0; idx < v.size(); ++idx) {
            const LatticePoint x = decode_index(idx, n, k);
            std::vector<double> z(x.begin(), x.end());
            lattice_gap = std::max(lattice_gap, std::abs(choquet_kary(v, z) - v(x)));
          }
          // Every nonempty face pattern of every cell: the chosen coordinates
          // sit on an interior grid line, the others are random fractions.
          for (std::int64_t cell = 0; cell < static_cast<std::int64_t>(std::pow(k, n)); ++cell) {
            std::vector<int> q(n);
            std::int64_t rest = cell;
            for (int i = 0; i < n; ++i, rest /= k) q[i] = static_cast<int>(rest % k);
            for (std::uint32_t face = 1; face < (1u << n); ++face) {
              std::vector<double> z(n);
              bool interior = true;
              for (int i = 0; i < n; ++i) {
                if ((face >> i) & 1u) {
                  if (q[i] == 0) interior = false;
                  z[i] = q[i];
                } else {
                  z[i] = q[i] + unit(gen);
                }
              }
              if (!interior) continue;
              LatticePoint here = LatticePoint::zeros(n), below = LatticePoint::zeros(n);
              for (int i = 0; i < n; ++i) {
                here[i] = q[i];
                below[i] = ((face >> i) & 1u) ? q[i] - 1 : q[i];
              }
              seam_gap = std::max(seam_gap, std::abs(choquet_kary_in_cell(v, z, here) -
                                                     choquet_kary_in_cell(v, z, below)));
              ++seams;
            }
          }
        }
      }
    }
    return Outcome{lattice_gap <= 1e-12 && seam_gap <= 1e-12,
                   fmt("lattice_gap=%.3g seams=%g seam_gap=%.3g tol=1e-12", lattice_gap, seams, seam_gap)};
  });

  criterion(9, "lattice-point interaction at 1_S is classical interaction", [] {
    double worst = 0.0;
    int checks = 0;
    for (int n = 1; n <= 5; ++n) {
      for (int g = 0; g < 10; ++g) {
        const auto v = random_game(900 + 10 * n + g, n, 1, GameKind::general);
        for (Coalition S : coalitions_up_to(n, n)) {
          LatticePoint x = LatticePoint::zeros(n);
          for (int i : S.members()) x[i] = 1;
          worst = std::max(worst, std::abs(lattice_point_interaction(v, x) -
                                           oracle::interaction_by_mobius(v, S.bits())));
          ++checks;
        }
      }
    }
    return Outcome{worst <= 1e-12, fmt("sets=%g max_gap=%.3g tol=1e-12", checks, worst)};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
