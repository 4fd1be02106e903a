// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "kernels_impl.hpp"

namespace mcgame::simd {

namespace {

void subtract(const double* a, const double* b, double* out, std::size_t count) {
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    _mm256_storeu_pd(out + j, _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j)));
  }
  for (; j < count; ++j) out[j] = a[j] - b[j];
}

double minimum(const double* values, std::size_t count) {
  double m = std::numeric_limits<double>::infinity();
  std::size_t j = 0;
  if (count >= 4) {
    __m256d acc = _mm256_set1_pd(m);
    for (; j + 4 <= count; j += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(values + j));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    m = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
  }
  for (; j < count; ++j) m = std::min(m, values[j]);
  return m;
}

// Lanes are independent points, so each lane follows the scalar operation
// order exactly.
void choquet_mobius(const double* mobius, int n, const double* const* rows, std::size_t count,
                    double* out, double* scratch) {
  const std::size_t sets = std::size_t{1} << n;
  std::size_t s = 0;
  for (; s + 4 <= count; s += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t a = 1; a < sets; ++a) {
      const int low = __builtin_ctzll(a);
      const std::size_t rest = a & (a - 1);
      __m256d w = _mm256_loadu_pd(rows[low] + s);
      if (rest != 0) w = _mm256_min_pd(_mm256_loadu_pd(scratch + 4 * rest), w);
      _mm256_storeu_pd(scratch + 4 * a, w);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(mobius[a]), w));
    }
    _mm256_storeu_pd(out + s, acc);
  }
  if (s < count) {
    const double* tail_rows[32];
    for (int i = 0; i < n; ++i) tail_rows[i] = rows[i] + s;
    scalar_kernels().choquet_mobius(mobius, n, tail_rows, count - s, out + s, scratch);
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2", subtract, minimum, choquet_mobius};
  return table;
}

}  // namespace mcgame::simd
