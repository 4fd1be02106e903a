#pragma once

#include "mcgame/simd/kernels.hpp"

namespace mcgame::simd {

#if defined(MCGAME_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

#if defined(MCGAME_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

}  // namespace mcgame::simd
