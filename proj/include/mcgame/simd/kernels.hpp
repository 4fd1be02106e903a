#pragma once

// Data-parallel inner loops with a scalar reference and ISA-specific variants.
//
// Every kernel is required to produce results bit-identical to the scalar
// reference: variants only reorder independent lanes, never a reduction, and
// the library is built without floating-point contraction.

#include <cstddef>
#include <string_view>
#include <vector>

namespace mcgame::simd {

struct KernelTable {
  std::string_view name;

  // out[j] = a[j] - b[j]. out may alias a or b.
  void (*subtract)(const double* a, const double* b, double* out, std::size_t count);

  // min_j values[j]; +infinity when count == 0.
  double (*minimum)(const double* values, std::size_t count);

  // Choquet integral in Moebius form for `count` points:
  //   out[s] = sum_{A != 0} mobius[A] * min_{i in A} rows[i][s]
  // with A ranging over bitmasks of n attributes in increasing order.
  // scratch must hold at least 2^n * kChoquetBlock doubles.
  void (*choquet_mobius)(const double* mobius, int n, const double* const* rows,
                         std::size_t count, double* out, double* scratch);
};

// Points processed per block by choquet_mobius.
inline constexpr std::size_t kChoquetBlock = 8;

const KernelTable& scalar_kernels();

// Variants compiled into this build and supported by the running CPU,
// scalar first.
std::vector<const KernelTable*> available_kernels();

// Best supported variant, or the one named by MCGAME_SIMD (e.g. "scalar")
// when that variable is set to an available name.
const KernelTable& active_kernels();

}  // namespace mcgame::simd
