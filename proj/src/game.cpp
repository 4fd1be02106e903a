#include "mcgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mcgame/error.hpp"
#include "tensor.hpp"

namespace mcgame {

namespace detail {

Tensor collapse_top_minus_bottom(std::span<const double> in, const std::vector<int>& radix,
                                 int axis, int top, const simd::KernelTable& kernels) {
  Tensor out{{}, radix};
  out.radix[axis] = 1;
  const std::uint64_t s = out.stride(axis);
  const std::uint64_t r = static_cast<std::uint64_t>(radix[axis]);
  const std::uint64_t outer = in.size() / (r * s);
  out.data.resize(outer * s);
  const double* src = in.data();
  double* dst = out.data.data();
  for (std::uint64_t o = 0; o < outer; ++o) {
    const double* block = src + o * r * s;
    kernels.subtract(block + top * s, block, dst + o * s, s);
  }
  return out;
}

Tensor forward_difference(std::span<const double> in, const std::vector<int>& radix, int axis,
                          const simd::KernelTable& kernels) {
  Tensor out{{}, radix};
  out.radix[axis] = radix[axis] - 1;
  const std::uint64_t s = out.stride(axis);
  const std::uint64_t r = static_cast<std::uint64_t>(radix[axis]);
  const std::uint64_t outer = in.size() / (r * s);
  out.data.resize(outer * (r - 1) * s);
  const double* src = in.data();
  double* dst = out.data.data();
  for (std::uint64_t o = 0; o < outer; ++o) {
    const double* block = src + o * r * s;
    kernels.subtract(block + s, block, dst + o * (r - 1) * s, (r - 1) * s);
  }
  return out;
}

}  // namespace detail

namespace {

// 53 random mantissa bits from a 64-bit draw, so streams are reproducible
// across standard library implementations.
double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void check_attribute(const MultichoiceGame& v, int i) {
  if (i < 0 || i >= v.n()) {
    throw GameError("attribute " + std::to_string(i + 1) + " out of range for n = " +
                    std::to_string(v.n()));
  }
}

void check_coalition(const MultichoiceGame& v, Coalition T) {
  if (!T.subset_of(Coalition::full(v.n()))) {
    throw GameError("coalition {" + T.label() + "} has attributes beyond n = " +
                    std::to_string(v.n()));
  }
}

}  // namespace

MultichoiceGame::MultichoiceGame(int n, int k, std::vector<double> values, const Limits& limits)
    : n_(n), k_(k), values_(std::move(values)) {
  const std::uint64_t expected = checked_table_size(n, k, limits.table_bits);
  if (values_.size() != expected) {
    throw GameError("table length mismatch: got " + std::to_string(values_.size()) +
                    " values, expected " + std::to_string(expected));
  }
  if (values_[0] != 0.0) {
    throw GameError("v(0) must be 0, got " + std::to_string(values_[0]));
  }
  strides_.resize(n);
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) {
    strides_[i] = s;
    s *= static_cast<std::uint64_t>(k + 1);
  }
}

MultichoiceGame MultichoiceGame::from_function(
    int n, int k, const std::function<double(const LatticePoint&)>& f, const Limits& limits) {
  const std::uint64_t size = checked_table_size(n, k, limits.table_bits);
  std::vector<double> values(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) values[idx] = f(decode_index(idx, n, k));
  return MultichoiceGame(n, k, std::move(values), limits);
}

double MultichoiceGame::value(const LatticePoint& x) const {
  return values_[encode_index(x, n_, k_)];
}

double discrete_derivative(const MultichoiceGame& v, Coalition T, const LatticePoint& x) {
  if (T.empty()) throw GameError("derivative needs a nonempty coalition");
  check_coalition(v, T);
  x.check(v.n(), v.k());
  std::uint64_t base = 0;
  for (int i = 0; i < v.n(); ++i) base += static_cast<std::uint64_t>(x[i]) * v.stride(i);
  for (int i : T.members()) {
    if (x[i] >= v.k()) {
      throw GameError("derivative along attribute " + std::to_string(i + 1) +
                      " needs x_i < k at " + x.to_string());
    }
  }
  const int t = T.size();
  double sum = 0.0;
  const std::uint32_t tb = T.bits();
  // Submasks of T in increasing order.
  for (std::uint32_t a = 0;; a = (a - tb) & tb) {
    std::uint64_t offset = 0;
    for (std::uint32_t b = a; b != 0; b &= b - 1) offset += v.stride(std::countr_zero(b));
    const bool negative = ((t - std::popcount(a)) & 1) != 0;
    const double value = v.at(base + offset);
    sum += negative ? -value : value;
    if (a == tb) break;
  }
  return sum;
}

MultichoiceGame extend_heterogeneous(std::span<const double> raw_values,
                                     std::span<const int> k_list, const Limits& limits) {
  if (k_list.empty()) throw GameError("empty k list");
  const int n = static_cast<int>(k_list.size());
  int k = 0;
  std::uint64_t raw_size = 1;
  std::vector<std::uint64_t> raw_stride(n);
  for (int i = 0; i < n; ++i) {
    if (k_list[i] < 1) throw GameError("every k_i must be at least 1");
    k = std::max(k, k_list[i]);
    raw_stride[i] = raw_size;
    raw_size *= static_cast<std::uint64_t>(k_list[i] + 1);
  }
  const std::uint64_t size = checked_table_size(n, k, limits.table_bits);
  if (raw_values.size() != raw_size) {
    throw GameError("table length mismatch: got " + std::to_string(raw_values.size()) +
                    " values, expected " + std::to_string(raw_size));
  }
  if (raw_values[0] != 0.0) throw GameError("v(0) must be 0");
  std::vector<double> values(size);
  std::vector<int> radix(n, k + 1);
  detail::for_each_point(radix, [&](std::uint64_t idx, const std::vector<int>& x) {
    std::uint64_t raw = 0;
    for (int i = 0; i < n; ++i) {
      raw += static_cast<std::uint64_t>(std::min(x[i], k_list[i])) * raw_stride[i];
    }
    values[idx] = raw_values[raw];
  });
  return MultichoiceGame(n, k, std::move(values), limits);
}

bool is_kary_capacity(const MultichoiceGame& v, double tol) {
  if (!(std::abs(v.top() - 1.0) <= tol)) return false;
  const auto& kernels = simd::active_kernels();
  const std::vector<int> radix(v.n(), v.k() + 1);
  for (int i = 0; i < v.n(); ++i) {
    const auto steps = detail::forward_difference(v.values(), radix, i, kernels);
    if (kernels.minimum(steps.data.data(), steps.data.size()) < -tol) return false;
  }
  return true;
}

MultichoiceGame restrict_absent(const MultichoiceGame& v, Coalition S) {
  check_coalition(v, S);
  if (S == Coalition::full(v.n())) throw GameError("cannot remove every attribute");
  if (S.empty()) return v;
  const auto kept = Coalition::full(v.n()).minus(S).members();
  const int m = static_cast<int>(kept.size());
  std::vector<double> values(checked_table_size(m, v.k(), 63));
  detail::for_each_point(std::vector<int>(m, v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           std::uint64_t src = 0;
                           for (int j = 0; j < m; ++j) src += x[j] * v.stride(kept[j]);
                           values[idx] = v.at(src);
                         });
  return MultichoiceGame(m, v.k(), std::move(values));
}

MultichoiceGame restrict_present_top(const MultichoiceGame& v, int i) {
  check_attribute(v, i);
  if (v.n() < 2) throw GameError("restriction in presence needs at least two attributes");
  const auto kept = Coalition::full(v.n()).without(i).members();
  const int m = v.n() - 1;
  const std::uint64_t top = static_cast<std::uint64_t>(v.k()) * v.stride(i);
  const double offset = v.at(top);
  std::vector<double> values(checked_table_size(m, v.k(), 63));
  detail::for_each_point(std::vector<int>(m, v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           std::uint64_t src = top;
                           for (int j = 0; j < m; ++j) src += x[j] * v.stride(kept[j]);
                           values[idx] = v.at(src) - offset;
                         });
  return MultichoiceGame(m, v.k(), std::move(values));
}

ReducedGame reduce_group(const MultichoiceGame& v, Coalition T, Coalition A) {
  check_coalition(v, T);
  if (A.empty()) throw GameError("macro attribute needs a nonempty group");
  if (!A.subset_of(T)) throw GameError("group {" + A.label() + "} is not inside {" + T.label() + "}");
  auto kept = Coalition::full(v.n()).minus(T).members();
  const int m = static_cast<int>(kept.size()) + 1;
  std::uint64_t macro_stride = 0;
  for (int i : A.members()) macro_stride += v.stride(i);
  std::vector<double> values(checked_table_size(m, v.k(), 63));
  detail::for_each_point(std::vector<int>(m, v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           std::uint64_t src = x[m - 1] * macro_stride;
                           for (int j = 0; j + 1 < m; ++j) src += x[j] * v.stride(kept[j]);
                           values[idx] = v.at(src);
                         });
  return ReducedGame{MultichoiceGame(m, v.k(), std::move(values)), std::move(kept), A};
}

MultichoiceGame random_game(std::uint64_t seed, int n, int k, GameKind kind,
                            const Limits& limits) {
  const std::uint64_t size = checked_table_size(n, k, limits.table_bits);
  std::mt19937_64 gen(seed);
  std::vector<double> values(size, 0.0);
  const std::vector<int> radix(n, k + 1);
  switch (kind) {
    case GameKind::general:
      for (std::uint64_t idx = 1; idx < size; ++idx) values[idx] = 2.0 * unit_double(gen) - 1.0;
      break;
    case GameKind::monotone: {
      for (std::uint64_t idx = 1; idx < size; ++idx) values[idx] = unit_double(gen);
      // Prefix sums along every axis turn masses into v(x) = sum_{y <= x} m(y).
      std::uint64_t s = 1;
      for (int a = 0; a < n; ++a) {
        for (std::uint64_t idx = 0; idx < size; ++idx) {
          if ((idx / s) % static_cast<std::uint64_t>(k + 1) != 0) values[idx] += values[idx - s];
        }
        s *= static_cast<std::uint64_t>(k + 1);
      }
      const double top = values.back();
      for (double& x : values) x /= top;
      values.back() = 1.0;
      break;
    }
    case GameKind::additive: {
      std::vector<double> w(n);
      for (double& wi : w) wi = unit_double(gen);
      detail::for_each_point(radix, [&](std::uint64_t idx, const std::vector<int>& x) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += w[i] * x[i];
        values[idx] = sum;
      });
      break;
    }
  }
  return MultichoiceGame(n, k, std::move(values), limits);
}

MultichoiceGame permute_attributes(const MultichoiceGame& v, std::span<const int> sigma) {
  const int n = v.n();
  if (static_cast<int>(sigma.size()) != n) throw GameError("permutation length must equal n");
  std::vector<bool> seen(n, false);
  for (int j : sigma) {
    if (j < 0 || j >= n || seen[j]) throw GameError("not a permutation of the attributes");
    seen[j] = true;
  }
  std::vector<double> values(v.size());
  detail::for_each_point(std::vector<int>(n, v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           std::uint64_t dst = 0;
                           for (int i = 0; i < n; ++i) dst += x[i] * v.stride(sigma[i]);
                           values[dst] = v.at(idx);
                         });
  return MultichoiceGame(n, v.k(), std::move(values));
}

MultichoiceGame combine(const MultichoiceGame& v, double alpha, const MultichoiceGame& w) {
  if (v.n() != w.n() || v.k() != w.k()) throw GameError("games live on different lattices");
  std::vector<double> values(v.size());
  for (std::uint64_t idx = 0; idx < v.size(); ++idx) values[idx] = v.at(idx) + alpha * w.at(idx);
  return MultichoiceGame(v.n(), v.k(), std::move(values));
}

}  // namespace mcgame
