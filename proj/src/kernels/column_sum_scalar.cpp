// SPDX-License-Identifier: Apache-2.0
#include "twobridge/kernels.hpp"

namespace twobridge::kernels {

std::int64_t column_floor_sum_scalar(std::int64_t n, std::int64_t m, std::int64_t a) {
  // Walk the line incrementally: value = floor(a*x/m), rem = a*x mod m.
  const std::int64_t step_quot = a / m;
  const std::int64_t step_rem = a % m;
  std::int64_t value = 0, rem = 0, sum = 0;
  for (std::int64_t x = 1; x < n; ++x) {
    value += step_quot;
    rem += step_rem;
    if (rem >= m) {
      rem -= m;
      ++value;
    }
    sum += value;
  }
  return sum;
}

}  // namespace twobridge::kernels
