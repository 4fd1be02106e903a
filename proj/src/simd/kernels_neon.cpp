#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "kernels_impl.hpp"

namespace mcgame::simd {

namespace {

void subtract(const double* a, const double* b, double* out, std::size_t count) {
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) vst1q_f64(out + j, vsubq_f64(vld1q_f64(a + j), vld1q_f64(b + j)));
  for (; j < count; ++j) out[j] = a[j] - b[j];
}

double minimum(const double* values, std::size_t count) {
  double m = std::numeric_limits<double>::infinity();
  std::size_t j = 0;
  if (count >= 2) {
    float64x2_t acc = vdupq_n_f64(m);
    for (; j + 2 <= count; j += 2) acc = vminq_f64(acc, vld1q_f64(values + j));
    m = std::min(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
  }
  for (; j < count; ++j) m = std::min(m, values[j]);
  return m;
}

void choquet_mobius(const double* mobius, int n, const double* const* rows, std::size_t count,
                    double* out, double* scratch) {
  const std::size_t sets = std::size_t{1} << n;
  std::size_t s = 0;
  for (; s + 2 <= count; s += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t a = 1; a < sets; ++a) {
      const int low = __builtin_ctzll(a);
      const std::size_t rest = a & (a - 1);
      float64x2_t w = vld1q_f64(rows[low] + s);
      if (rest != 0) w = vminq_f64(vld1q_f64(scratch + 2 * rest), w);
      vst1q_f64(scratch + 2 * a, w);
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(mobius[a]), w));
    }
    vst1q_f64(out + s, acc);
  }
  if (s < count) {
    const double* tail_rows[32];
    for (int i = 0; i < n; ++i) tail_rows[i] = rows[i] + s;
    scalar_kernels().choquet_mobius(mobius, n, tail_rows, count - s, out + s, scratch);
  }
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{"neon", subtract, minimum, choquet_mobius};
  return table;
}

}  // namespace mcgame::simd
