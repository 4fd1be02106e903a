#include "mcgame/indices.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "mcgame/error.hpp"
#include "tensor.hpp"

namespace mcgame {

namespace {

void check_query(const MultichoiceGame& v, Coalition T, std::uint64_t cells_per_axis_in_T,
                 const Limits& limits) {
  if (T.empty()) throw GameError("interaction needs a nonempty coalition");
  if (!T.subset_of(Coalition::full(v.n()))) {
    throw GameError("coalition {" + T.label() + "} has attributes beyond n = " +
                    std::to_string(v.n()));
  }
  const std::uint64_t cap = detail::budget(limits.query_bits);
  std::uint64_t count = 1;
  for (int i = 0; i < v.n(); ++i) {
    const std::uint64_t factor =
        T.contains(i) ? cells_per_axis_in_T : static_cast<std::uint64_t>(v.k() + 1);
    if (count > cap / factor) {
      throw SizeLimitError("query on {" + T.label() + "} exceeds the 2^" +
                           std::to_string(limits.query_bits) + " evaluation limit");
    }
    count *= factor;
  }
}

// Per-(s, kap) class sums of `data`, then the weighted total. Summing each
// class in canonical order before weighting keeps the result independent of
// how profiles are visited.
double weighted_class_total(const detail::Tensor& table, Coalition T, int n, int k) {
  const int t = T.size();
  const int m = n - t;
  const auto coef = coefficient_table(n, t);
  std::vector<double> sums(coef.size(), 0.0);
  detail::for_each_point(table.radix, [&](std::uint64_t idx, const std::vector<int>& x) {
    int s = 0;
    int kap = 0;
    for (int a = 0; a < n; ++a) {
      if (T.contains(a)) continue;
      s += x[a] > 0;
      kap += x[a] == k;
    }
    sums[static_cast<std::size_t>(s) * (m + 1) + kap] += table.data[idx];
  });
  double total = 0.0;
  for (std::size_t c = 0; c < sums.size(); ++c) total += coef[c] * sums[c];
  return total;
}

// Corner sums over {0, k}^T for every profile of N \ T, weighted by class.
double closed_form(const MultichoiceGame& v, Coalition T, const Limits& limits) {
  check_query(v, T, 2, limits);
  const auto& kernels = simd::active_kernels();
  detail::Tensor table{{}, std::vector<int>(v.n(), v.k() + 1)};
  bool first = true;
  for (int axis : T.members()) {
    table = detail::collapse_top_minus_bottom(
        first ? v.values() : std::span<const double>(table.data), table.radix, axis, v.k(),
        kernels);
    first = false;
  }
  return weighted_class_total(table, T, v.n(), v.k());
}

// (n - t - s)! t! / (n - s + 1)!, the classical interaction weight of a
// coalition of size t outside S.
double classical_weight(int n, int s, int t) {
  static std::map<std::tuple<int, int, int>, double> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, s, t}, 0.0);
  if (inserted) {
    it->second = to_double(Rational(factorial(n - t - s) * factorial(t), factorial(n - s + 1)));
  }
  return it->second;
}

void require_binary(const MultichoiceGame& v) {
  if (v.k() != 1) throw GameError("classical indices need k = 1, got k = " + std::to_string(v.k()));
}

}  // namespace

Rational shapley_coefficient(int n, int t, int s, int kap) {
  if (t < 1 || kap < 0 || kap > s || s > n - t) {
    throw GameError("coefficient arguments out of range: n=" + std::to_string(n) +
                    " t=" + std::to_string(t) + " s=" + std::to_string(s) +
                    " kap=" + std::to_string(kap));
  }
  return Rational(factorial(n - s - t) * factorial(kap), factorial(n - s + kap - t + 1));
}

std::vector<double> coefficient_table(int n, int t) {
  static std::map<std::pair<int, int>, std::vector<double>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, t});
    if (it != cache.end()) return it->second;
  }
  const int m = n - t;
  std::vector<double> table(static_cast<std::size_t>(m + 1) * (m + 1), 0.0);
  for (int s = 0; s <= m; ++s) {
    for (int kap = 0; kap <= s; ++kap) {
      table[static_cast<std::size_t>(s) * (m + 1) + kap] =
          to_double(shapley_coefficient(n, t, s, kap));
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::pair{n, t}, std::move(table)).first->second;
}

double importance(const MultichoiceGame& v, int i, const Limits& limits) {
  if (i < 0 || i >= v.n()) {
    throw GameError("attribute " + std::to_string(i + 1) + " out of range for n = " +
                    std::to_string(v.n()));
  }
  return closed_form(v, Coalition::single(i), limits);
}

double interaction(const MultichoiceGame& v, Coalition T, const Limits& limits) {
  return closed_form(v, T, limits);
}

double interaction_via_derivatives(const MultichoiceGame& v, Coalition T, const Limits& limits) {
  check_query(v, T, static_cast<std::uint64_t>(v.k()), limits);
  const auto& kernels = simd::active_kernels();
  detail::Tensor table{{}, std::vector<int>(v.n(), v.k() + 1)};
  bool first = true;
  for (int axis : T.members()) {
    table = detail::forward_difference(
        first ? v.values() : std::span<const double>(table.data), table.radix, axis, kernels);
    first = false;
  }
  return weighted_class_total(table, T, v.n(), v.k());
}

double interaction_recursive(const MultichoiceGame& v, Coalition T, const Limits& limits) {
  check_query(v, T, 2, limits);
  const int t = T.size();
  const std::uint32_t tb = T.bits();
  double total = 0.0;
  for (std::uint32_t a = tb; a != 0; a = (a - 1) & tb) {
    const auto reduced = reduce_group(v, T, Coalition(a));
    const double phi = importance(reduced.game, reduced.game.n() - 1, limits);
    total += ((t - std::popcount(a)) & 1) ? -phi : phi;
  }
  return total;
}

double classical_shapley(const MultichoiceGame& v, int i) {
  require_binary(v);
  if (i < 0 || i >= v.n()) throw GameError("attribute out of range");
  // For k = 1 the canonical index of a point is the bitmask of its support.
  const std::uint32_t others = Coalition::full(v.n()).without(i).bits();
  const std::uint32_t bit = 1u << i;
  double total = 0.0;
  for (std::uint32_t S = others;; S = (S - 1) & others) {
    const int s = std::popcount(S);
    const double weight =
        to_double(Rational(factorial(v.n() - s - 1) * factorial(s), factorial(v.n())));
    total += weight * (v.at(S | bit) - v.at(S));
    if (S == 0) break;
  }
  return total;
}

double classical_interaction(const MultichoiceGame& v, Coalition S) {
  require_binary(v);
  if (S.empty()) throw GameError("interaction needs a nonempty coalition");
  if (!S.subset_of(Coalition::full(v.n()))) throw GameError("coalition out of range");
  const int n = v.n();
  const int s = S.size();
  const std::uint32_t sb = S.bits();
  const std::uint32_t others = Coalition::full(n).minus(S).bits();
  double total = 0.0;
  for (std::uint32_t T = others;; T = (T - 1) & others) {
    double alternating = 0.0;
    for (std::uint32_t K = sb;; K = (K - 1) & sb) {
      const double value = v.at(K | T);
      alternating += ((s - std::popcount(K)) & 1) ? -value : value;
      if (K == 0) break;
    }
    total += classical_weight(n, s, std::popcount(T)) * alternating;
    if (T == 0) break;
  }
  return total;
}

double lattice_point_interaction(const MultichoiceGame& v, const LatticePoint& x) {
  x.check(v.n(), v.k());
  const Coalition J = support(x);
  if (J.empty()) throw GameError("lattice-point interaction is undefined at 0");
  const int n = v.n();
  const int j = J.size();
  const std::uint32_t outside = Coalition::full(n).minus(J).bits();

  std::uint64_t base = 0;
  for (int i : J.members()) base += static_cast<std::uint64_t>(x[i] - 1) * v.stride(i);

  double total = 0.0;
  for (std::uint32_t top = outside;; top = (top - 1) & outside) {
    // y_l = k on `top`, 0 elsewhere outside J; y_J = x_J - 1 is below k.
    const int h = std::popcount(top);
    std::uint64_t y = base;
    for (std::uint32_t b = top; b != 0; b &= b - 1) {
      y += static_cast<std::uint64_t>(v.k()) * v.stride(std::countr_zero(b));
    }
    const double alpha =
        to_double(Rational(factorial(n - j - h) * factorial(h), factorial(n - j + 1)));
    double delta = 0.0;
    const std::uint32_t jb = J.bits();
    for (std::uint32_t a = 0;; a = (a - jb) & jb) {
      std::uint64_t offset = 0;
      for (std::uint32_t b = a; b != 0; b &= b - 1) offset += v.stride(std::countr_zero(b));
      const double value = v.at(y + offset);
      delta += ((j - std::popcount(a)) & 1) ? -value : value;
      if (a == jb) break;
    }
    total += alpha * delta;
    if (top == 0) break;
  }
  return total;
}

double efficiency_rhs(const MultichoiceGame& v) {
  std::uint64_t diagonal = 0;
  for (int i = 0; i < v.n(); ++i) diagonal += v.stride(i);
  double total = 0.0;
  detail::for_each_point(std::vector<int>(v.n(), v.k()),
                         [&](std::uint64_t, const std::vector<int>& x) {
                           std::uint64_t idx = 0;
                           for (int i = 0; i < v.n(); ++i) idx += x[i] * v.stride(i);
                           total += v.at(idx + diagonal) - v.at(idx);
                         });
  return total;
}

}  // namespace mcgame
