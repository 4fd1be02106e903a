#include <limits>

#include "kernels_impl.hpp"

namespace mcgame::simd {

namespace scalar {

void subtract(const double* a, const double* b, double* out, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) out[j] = a[j] - b[j];
}

double minimum(const double* values, std::size_t count) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < count; ++j) m = m < values[j] ? m : values[j];
  return m;
}

void choquet_mobius(const double* mobius, int n, const double* const* rows, std::size_t count,
                    double* out, double* scratch) {
  const std::size_t sets = std::size_t{1} << n;
  for (std::size_t s = 0; s < count; ++s) {
    // scratch[A] = min_{i in A} w_i, built from A without its lowest member.
    double acc = 0.0;
    for (std::size_t a = 1; a < sets; ++a) {
      const int low = __builtin_ctzll(a);
      const std::size_t rest = a & (a - 1);
      const double w = rows[low][s];
      // Same selection rule as the vector min instructions: (a < b) ? a : b.
      scratch[a] = rest == 0 ? w : (scratch[rest] < w ? scratch[rest] : w);
      acc = acc + mobius[a] * scratch[a];
    }
    out[s] = acc;
  }
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", scalar::subtract, scalar::minimum,
                                 scalar::choquet_mobius};
  return table;
}

}  // namespace mcgame::simd
