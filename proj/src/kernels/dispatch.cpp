// SPDX-License-Identifier: Apache-2.0
#include "twobridge/kernels.hpp"

namespace twobridge::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(TWOBRIDGE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Isa best_isa() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

std::int64_t column_floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, Isa isa) {
#if defined(TWOBRIDGE_HAVE_AVX2)
  if (isa == Isa::Avx2 && avx2_available()) return column_floor_sum_avx2(n, m, a);
#else
  (void)isa;
#endif
  return column_floor_sum_scalar(n, m, a);
}

}  // namespace twobridge::kernels
