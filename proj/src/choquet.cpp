#include "mcgame/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
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

double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void check_cell(const MultichoiceGame& v, const LatticePoint& q) {
  if (q.size() != v.n()) throw GameError("cell base has the wrong number of components");
  for (int i = 0; i < v.n(); ++i) {
    if (q[i] < 0 || q[i] >= v.k()) {
      throw GameError("cell base " + q.to_string() + " must lie in {0.." +
                      std::to_string(v.k() - 1) + "}^N");
    }
  }
}

void check_coalition(const MultichoiceGame& v, Coalition T) {
  if (T.empty()) throw GameError("interaction needs a nonempty coalition");
  if (!T.subset_of(Coalition::full(v.n()))) {
    throw GameError("coalition {" + T.label() + "} has attributes beyond n = " +
                    std::to_string(v.n()));
  }
}

std::uint64_t index_of(const MultichoiceGame& v, const LatticePoint& q) {
  std::uint64_t idx = 0;
  for (int i = 0; i < v.n(); ++i) idx += static_cast<std::uint64_t>(q[i]) * v.stride(i);
  return idx;
}

// Ascending order of w, ties broken by attribute index.
std::vector<int> ascending_order(std::span<const double> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  return order;
}

// sum_i (w_pi(i) - w_pi(i-1)) * mu({pi(i), ..., pi(n)}) with mu given as a
// function of the coalition bitmask.
template <class Mu>
double sorted_sum(std::span<const double> w, Mu&& mu) {
  const auto order = ascending_order(w);
  std::uint32_t upper = 0;
  for (int i : order) upper |= 1u << i;
  double total = 0.0;
  double previous = 0.0;
  for (int i : order) {
    total += (w[i] - previous) * mu(upper);
    previous = w[i];
    upper &= ~(1u << i);
  }
  return total;
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap,
                            const char* what) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > cap / base) throw SizeLimitError(std::string(what) + " exceeds the size limit");
    out *= base;
  }
  return out;
}

}  // namespace

MultichoiceGame SectionCapacity::as_game() const {
  return MultichoiceGame(n(), 1, weights);
}

SectionCapacity section_capacity(const MultichoiceGame& v, const LatticePoint& q) {
  check_cell(v, q);
  if (v.n() >= 31) throw SizeLimitError("section capacity over too many attributes");
  const std::uint64_t base = index_of(v, q);
  const double at_base = v.at(base);
  const std::uint32_t sets = 1u << v.n();
  std::vector<double> weights(sets, 0.0);
  for (std::uint32_t a = 1; a < sets; ++a) {
    std::uint64_t offset = 0;
    for (std::uint32_t b = a; b != 0; b &= b - 1) offset += v.stride(std::countr_zero(b));
    weights[a] = v.at(base + offset) - at_base;
  }
  return SectionCapacity{q, std::move(weights)};
}

double choquet_capacity(const SectionCapacity& mu, std::span<const double> w) {
  if (static_cast<int>(w.size()) != mu.n()) throw GameError("point has the wrong dimension");
  for (double wi : w) {
    if (!(wi >= 0.0 && wi <= 1.0)) throw GameError("Choquet argument must lie in [0, 1]^n");
  }
  return sorted_sum(w, [&](std::uint32_t A) { return mu.weights[A]; });
}

double choquet_kary_in_cell(const MultichoiceGame& v, std::span<const double> z,
                            const LatticePoint& q) {
  check_cell(v, q);
  if (static_cast<int>(z.size()) != v.n()) throw GameError("point has the wrong dimension");
  std::vector<double> offset(v.n());
  for (int i = 0; i < v.n(); ++i) {
    offset[i] = z[i] - q[i];
    if (!(offset[i] >= 0.0 && offset[i] <= 1.0)) {
      throw GameError("point does not lie in the cell based at " + q.to_string());
    }
  }
  const std::uint64_t base = index_of(v, q);
  const double at_base = v.at(base);
  return at_base + sorted_sum(offset, [&](std::uint32_t A) {
           std::uint64_t idx = base;
           for (std::uint32_t b = A; b != 0; b &= b - 1) idx += v.stride(std::countr_zero(b));
           return v.at(idx) - at_base;
         });
}

double choquet_kary(const MultichoiceGame& v, std::span<const double> z) {
  if (static_cast<int>(z.size()) != v.n()) throw GameError("point has the wrong dimension");
  std::vector<int> q(v.n());
  for (int i = 0; i < v.n(); ++i) {
    if (!(z[i] >= 0.0 && z[i] <= v.k())) {
      throw GameError("coordinate " + std::to_string(i + 1) + " = " + std::to_string(z[i]) +
                      " outside [0, " + std::to_string(v.k()) + "]");
    }
    q[i] = std::min(static_cast<int>(std::floor(z[i])), v.k() - 1);
  }
  return choquet_kary_in_cell(v, z, LatticePoint(std::move(q)));
}

std::vector<double> mobius_transform(std::span<const double> set_function) {
  const std::size_t size = set_function.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw GameError("set function length must be a power of two");
  }
  std::vector<double> m(set_function.begin(), set_function.end());
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t a = 0; a < size; ++a) {
      if (a & bit) m[a] -= m[a ^ bit];
    }
  }
  return m;
}

std::vector<double> cellsum_contributions(const MultichoiceGame& v, Coalition T,
                                          const Limits& limits) {
  check_coalition(v, T);
  const std::uint64_t cap = detail::budget(limits.query_bits);
  const std::uint64_t cells = checked_power(v.k(), v.n(), cap, "cell-sum query");
  checked_power(2, v.n(), cap / cells, "cell-sum query");
  std::vector<double> out;
  out.reserve(cells);
  detail::for_each_point(std::vector<int>(v.n(), v.k()),
                         [&](std::uint64_t, const std::vector<int>& q) {
                           const auto mu = section_capacity(v, LatticePoint(q));
                           out.push_back(classical_interaction(mu.as_game(), T));
                         });
  return out;
}

double interaction_cellsum(const MultichoiceGame& v, Coalition T, const Limits& limits) {
  double total = 0.0;
  for (double c : cellsum_contributions(v, T, limits)) total += c;
  return total;
}

IntegralEstimate integral_check(const MultichoiceGame& v, Coalition T, std::int64_t samples,
                                std::uint64_t seed, const Limits& limits) {
  check_coalition(v, T);
  if (samples < 1) throw GameError("sample count must be at least 1");
  const int n = v.n();
  const int k = v.k();
  const std::uint64_t cap = detail::budget(limits.query_bits);
  const std::uint64_t cells = checked_power(k, n, cap, "integral check");
  const bool has_free = T != Coalition::full(n);
  const std::uint64_t per_cell =
      has_free ? std::max<std::uint64_t>(2, (static_cast<std::uint64_t>(samples) + cells - 1) / cells)
               : 1;
  // Work is per_cell points times 2^t corners times 2^n Moebius terms.
  if (per_cell > cap / cells) throw SizeLimitError("integral check exceeds the size limit");
  checked_power(2, n + T.size(), cap / (per_cell * cells), "integral check");

  const auto& kernels = simd::active_kernels();
  const auto corners = T.members();
  const std::uint32_t tb = T.bits();
  const std::size_t sets = std::size_t{1} << n;
  std::vector<double> scratch(sets * simd::kChoquetBlock);
  std::vector<std::vector<double>> free_rows(n);
  std::vector<std::vector<double>> fixed_rows(n);
  std::vector<double> g(per_cell);
  std::vector<double> chunk(per_cell);
  std::vector<const double*> rows(n);

  IntegralEstimate result;
  double variance = 0.0;
  detail::for_each_point(std::vector<int>(n, k), [&](std::uint64_t cell, const std::vector<int>& x) {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(cell)));
    for (int i = 0; i < n; ++i) {
      if (T.contains(i)) continue;
      free_rows[i].resize(per_cell);
      for (auto& u : free_rows[i]) u = unit_double(gen);
    }
    std::fill(g.begin(), g.end(), 0.0);
    for (std::uint32_t a = 0;; a = (a - tb) & tb) {
      // Corner x_T + 1_A lies in cell q with offset 0 or 1 along T.
      std::vector<int> q(x);
      for (int i : corners) {
        const int z = x[i] + ((a >> i) & 1u);
        q[i] = std::min(z, k - 1);
        fixed_rows[i].assign(per_cell, static_cast<double>(z - q[i]));
        rows[i] = fixed_rows[i].data();
      }
      for (int i = 0; i < n; ++i) {
        if (!T.contains(i)) rows[i] = free_rows[i].data();
      }
      const auto mu = section_capacity(v, LatticePoint(q));
      const auto mobius = mobius_transform(mu.weights);
      kernels.choquet_mobius(mobius.data(), n, rows.data(), per_cell, chunk.data(),
                             scratch.data());
      const double at_base = v.at(index_of(v, LatticePoint(q)));
      const bool negative = ((T.size() - std::popcount(a)) & 1) != 0;
      for (std::uint64_t s = 0; s < per_cell; ++s) {
        const double c = at_base + chunk[s];
        g[s] += negative ? -c : c;
      }
      if (a == tb) break;
    }
    double mean = 0.0;
    for (double value : g) mean += value;
    mean /= static_cast<double>(per_cell);
    result.estimate += mean;
    if (per_cell > 1) {
      double ss = 0.0;
      for (double value : g) ss += (value - mean) * (value - mean);
      variance += ss / static_cast<double>(per_cell - 1) / static_cast<double>(per_cell);
    }
  });
  result.std_error = std::sqrt(variance);
  return result;
}

}  // namespace mcgame
