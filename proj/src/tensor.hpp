#pragma once

// Internal helpers for dense tables with per-axis radices. Not installed.

#include <cstdint>
#include <span>
#include <vector>

#include "mcgame/simd/kernels.hpp"

namespace mcgame::detail {

// Dense table over prod_a {0..radix[a]-1}, axis 0 least significant.
struct Tensor {
  std::vector<double> data;
  std::vector<int> radix;

  std::uint64_t stride(int axis) const {
    std::uint64_t s = 1;
    for (int a = 0; a < axis; ++a) s *= static_cast<std::uint64_t>(radix[a]);
    return s;
  }
};

// Replaces axis `axis` by the single slice in[level=top] - in[level=0].
// The axis is kept with radix 1.
Tensor collapse_top_minus_bottom(std::span<const double> in, const std::vector<int>& radix,
                                 int axis, int top, const simd::KernelTable& kernels);

// Forward difference along `axis`: radix r becomes r - 1 and
// out[.., j, ..] = in[.., j + 1, ..] - in[.., j, ..].
Tensor forward_difference(std::span<const double> in, const std::vector<int>& radix, int axis,
                          const simd::KernelTable& kernels);

// Calls f(index, digits) for every point of prod_a {0..radix[a]-1} in
// canonical order.
template <class F>
void for_each_point(const std::vector<int>& radix, F&& f) {
  const int n = static_cast<int>(radix.size());
  std::uint64_t total = 1;
  for (int r : radix) total *= static_cast<std::uint64_t>(r);
  std::vector<int> digits(n, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    f(index, static_cast<const std::vector<int>&>(digits));
    for (int a = 0; a < n; ++a) {
      if (++digits[a] < radix[a]) break;
      digits[a] = 0;
    }
  }
}

// 2^bits as a budget, saturating.
inline std::uint64_t budget(int bits) {
  return bits >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << bits);
}

}  // namespace mcgame::detail
