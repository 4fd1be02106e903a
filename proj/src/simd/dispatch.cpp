#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace mcgame::simd {

namespace {

bool cpu_has_avx2() {
#if defined(MCGAME_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select() {
  const auto candidates = available_kernels();
  if (const char* wanted = std::getenv("MCGAME_SIMD")) {
    for (const KernelTable* table : candidates) {
      if (table->name == std::string_view(wanted)) return *table;
    }
  }
  return *candidates.back();
}

}  // namespace

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(MCGAME_HAVE_AVX2)
  if (cpu_has_avx2()) out.push_back(&avx2_kernels());
#endif
#if defined(MCGAME_HAVE_NEON)
  out.push_back(&neon_kernels());
#endif
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace mcgame::simd
