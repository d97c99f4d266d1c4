// SPDX-License-Identifier: Apache-2.0
//
// Built with -mavx2. Four columns per step in double lanes: every product
// a*x is below 2^52, so it and quot*m are exact, and the remainder test
// repairs the at most one-off quotient from the reciprocal multiply.
#include <immintrin.h>

#include "twobridge/kernels.hpp"

namespace twobridge::kernels {

std::int64_t column_floor_sum_avx2(std::int64_t n, std::int64_t m, std::int64_t a) {
  constexpr std::int64_t kExactLimit = std::int64_t{1} << 52;
  if (n <= 1) return 0;
  // Products a*x and every partial lane sum (bounded by a*n*n/(2m)) must
  // stay exact in a double.
  if (a != 0 && n > kExactLimit / a) return column_floor_sum_scalar(n, m, a);
  if (static_cast<__int128>(a) * n * n / (2 * m) >= kExactLimit) {
    return column_floor_sum_scalar(n, m, a);
  }

  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d x = _mm256_setr_pd(1.0, 2.0, 3.0, 4.0);

  __m256d acc = _mm256_setzero_pd();
  std::int64_t col = 1;
  for (; col + 3 < n; col += 4) {
    const __m256d num = _mm256_mul_pd(x, va);
    __m256d quot = _mm256_floor_pd(_mm256_mul_pd(num, vinv));
    const __m256d rem = _mm256_sub_pd(num, _mm256_mul_pd(quot, vm));
    quot = _mm256_add_pd(quot, _mm256_and_pd(_mm256_cmp_pd(rem, vm, _CMP_GE_OQ), one));
    quot = _mm256_sub_pd(quot, _mm256_and_pd(_mm256_cmp_pd(rem, zero, _CMP_LT_OQ), one));
    acc = _mm256_add_pd(acc, quot);
    x = _mm256_add_pd(x, four);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  std::int64_t sum = 0;
  for (double lane : lanes) sum += static_cast<std::int64_t>(lane);
  for (; col < n; ++col) sum += (a * col) / m;
  return sum;
}

}  // namespace twobridge::kernels
