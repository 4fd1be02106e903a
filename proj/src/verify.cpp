#include "mcgame/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mcgame/error.hpp"
#include "mcgame/indices.hpp"
#include "tensor.hpp"

namespace mcgame {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

// Members above `removed` shift down by one.
Coalition drop_index(Coalition T, int removed) {
  const std::uint32_t low = T.bits() & ((1u << removed) - 1u);
  const std::uint32_t high = (T.bits() >> (removed + 1)) << removed;
  return Coalition(low | high);
}

std::string subject(Coalition T) { return "{" + T.label() + "}"; }

class Recorder {
 public:
  Recorder(VerificationReport& report) : report_(report) {}

  void check(std::uint64_t seed, std::string what, double lhs, double rhs) {
    check(seed, std::move(what), lhs, rhs, std::abs(lhs - rhs));
  }

  void check(std::uint64_t seed, std::string what, double lhs, double rhs, double gap) {
    AxiomCheck c{seed, std::move(what), lhs, rhs, gap};
    ++report_.checks;
    const bool ok = gap <= report_.tolerance;
    if (!report_.worst || !(gap <= report_.max_gap)) {
      report_.max_gap = std::isnan(gap) ? gap : std::max(report_.max_gap, gap);
      report_.worst = c;
    }
    if (!ok) {
      report_.passed = false;
      report_.failures.push_back(std::move(c));
    }
  }

 private:
  VerificationReport& report_;
};

std::vector<Coalition> tested_coalitions(int n) { return coalitions_up_to(n, std::min(n, 4)); }

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::linearity: return "L";
    case Axiom::null_attribute: return "N";
    case Axiom::invariance: return "I";
    case Axiom::symmetry: return "S";
    case Axiom::efficiency: return "E";
    case Axiom::recursivity: return "R";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<Axiom> all_axioms() {
  return {Axiom::linearity,  Axiom::null_attribute, Axiom::invariance,
          Axiom::symmetry,   Axiom::efficiency,     Axiom::recursivity};
}

MultichoiceGame make_null_extension(const MultichoiceGame& v, int position,
                                    const Limits& limits) {
  if (position < 0 || position > v.n()) throw GameError("null attribute position out of range");
  const int n = v.n() + 1;
  std::vector<double> values(checked_table_size(n, v.k(), limits.table_bits));
  detail::for_each_point(std::vector<int>(n, v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           std::uint64_t src = 0;
                           for (int i = 0, j = 0; i < n; ++i) {
                             if (i == position) continue;
                             src += x[i] * v.stride(j++);
                           }
                           values[idx] = v.at(src);
                         });
  return MultichoiceGame(n, v.k(), std::move(values), limits);
}

MultichoiceGame make_invariance_partner(const MultichoiceGame& v, int i) {
  if (i < 0 || i >= v.n()) throw GameError("attribute out of range");
  if (v.k() < 2) throw GameError("invariance partner needs k >= 2");
  const int k = v.k();
  const std::uint64_t step = v.stride(i);
  std::vector<double> values(v.size());
  detail::for_each_point(std::vector<int>(v.n(), k + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           const std::uint64_t bottom = idx - x[i] * step;
                           const int level = x[i];
                           if (level == 0) {
                             values[idx] = 0.0;
                           } else if (level < k) {
                             values[idx] = v.at(bottom + (level + 1) * step) - v.at(bottom + step);
                           } else {
                             values[idx] = v.at(bottom + k * step) - v.at(bottom);
                           }
                         });
  return MultichoiceGame(v.n(), k, std::move(values));
}

VerificationReport verify_axiom(Axiom axiom, int trials, std::uint64_t seed, int n, int k,
                                double tol, const MultichoiceGame* fixed, const Limits& limits) {
  if (trials < 1) throw GameError("trial count must be at least 1");
  if (fixed) {
    n = fixed->n();
    k = fixed->k();
  }
  checked_table_size(n + 1, k, limits.table_bits);

  VerificationReport report;
  report.axiom = std::string(axiom_name(axiom));
  report.tolerance = tol;
  Recorder rec(report);

  if (axiom == Axiom::invariance) {
    if (k < 2) {
      report.note = "skipped: the invariance relations are vacuous for k < 2";
      return report;
    }
    report.note = "partner built for each attribute separately";
  }
  if (axiom == Axiom::recursivity && n < 2) {
    report.note = "skipped: recursivity needs at least two attributes";
    return report;
  }

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t ts = trial_seed(seed, trial);
    std::mt19937_64 gen(ts);
    const MultichoiceGame v =
        fixed ? *fixed : random_game(gen(), n, k, GameKind::general, limits);
    ++report.trials;

    switch (axiom) {
      case Axiom::linearity: {
        const auto w = random_game(gen(), n, k, GameKind::general, limits);
        const double alpha = 4.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 2.0;
        const auto mixed = combine(v, alpha, w);
        for (Coalition T : tested_coalitions(n)) {
          rec.check(ts, subject(T), interaction(mixed, T, limits),
                    interaction(v, T, limits) + alpha * interaction(w, T, limits));
        }
        break;
      }
      case Axiom::null_attribute: {
        const int position = static_cast<int>(gen() % static_cast<std::uint64_t>(n + 1));
        const auto extended = make_null_extension(v, position, limits);
        for (Coalition T : tested_coalitions(n + 1)) {
          if (!T.contains(position)) continue;
          rec.check(ts, subject(T), interaction(extended, T, limits), 0.0);
        }
        break;
      }
      case Axiom::invariance: {
        for (int i = 0; i < n; ++i) {
          const auto w = make_invariance_partner(v, i);
          for (Coalition T : tested_coalitions(n)) {
            if (!T.contains(i)) continue;
            rec.check(ts, "i=" + std::to_string(i + 1) + " " + subject(T),
                      interaction(v, T, limits), interaction(w, T, limits));
          }
        }
        break;
      }
      case Axiom::symmetry: {
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[i] = i;
        for (int i = n - 1; i > 0; --i) {
          std::swap(sigma[i], sigma[gen() % static_cast<std::uint64_t>(i + 1)]);
        }
        const auto permuted = permute_attributes(v, sigma);
        for (Coalition T : tested_coalitions(n)) {
          std::uint32_t image = 0;
          for (int i : T.members()) image |= 1u << sigma[i];
          rec.check(ts, subject(T), interaction(permuted, Coalition(image), limits),
                    interaction(v, T, limits));
        }
        break;
      }
      case Axiom::efficiency: {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += importance(v, i, limits);
        rec.check(ts, "sum of importances", total, efficiency_rhs(v));
        break;
      }
      case Axiom::recursivity: {
        for (Coalition T : coalitions_up_to(n, std::min(n, 3))) {
          if (T.size() < 2) continue;
          const double lhs = interaction(v, T, limits);
          for (int i : T.members()) {
            const Coalition rest = drop_index(T.without(i), i);
            const double present = interaction(restrict_present_top(v, i), rest, limits);
            const double absent = interaction(restrict_absent(v, Coalition::single(i)), rest, limits);
            rec.check(ts, "i=" + std::to_string(i + 1) + " " + subject(T), lhs, present - absent);
          }
        }
        break;
      }
    }
  }
  return report;
}

Rational interval_weight_sum(int n, int a, int b) {
  if (a < 0 || a > b || b >= n) throw GameError("interval identity needs 0 <= a <= b < n");
  Rational total = 0;
  for (int s = a; s <= b; ++s) {
    const Integer choose = factorial(b - a) / (factorial(s - a) * factorial(b - s));
    total += Rational(choose * factorial(n - s - 1) * factorial(s), factorial(n));
  }
  return total;
}

Rational interval_weight_closed(int n, int a, int b) {
  if (a < 0 || a > b || b >= n) throw GameError("interval identity needs 0 <= a <= b < n");
  return Rational(factorial(n - b - 1) * factorial(a), factorial(n - b + a));
}

VerificationReport check_interval_identity(int n) {
  if (n < 1) throw GameError("interval identity needs n >= 1");
  VerificationReport report;
  report.axiom = "interval_identity";
  report.tolerance = 0.0;
  report.note = "exact rationals over 0 <= a <= b < n; b = n is excluded";
  Recorder rec(report);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a <= b; ++a) {
      const Rational lhs = interval_weight_sum(n, a, b);
      const Rational rhs = interval_weight_closed(n, a, b);
      ++report.trials;
      double gap = to_double(Rational(abs(lhs - rhs)));
      if (lhs != rhs && gap == 0.0) gap = std::numeric_limits<double>::denorm_min();
      rec.check(0, "a=" + std::to_string(a) + " b=" + std::to_string(b), to_double(lhs),
                to_double(rhs), gap);
    }
  }
  return report;
}

}  // namespace mcgame
