// SPDX-License-Identifier: Apache-2.0
#include "twobridge/errors.hpp"
#include "twobridge/kernels.hpp"

namespace twobridge::kernels {

std::int64_t floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
  if (n < 0 || m < 1 || a < 0 || b < 0) throw DomainError("floor_sum: invalid arguments");
  using Wide = __int128;
  Wide total = 0;
  Wide nn = n, mm = m, aa = a, bb = b;
  // Reduce a and b below m, then swap the roles of the axes.
  while (true) {
    if (aa >= mm) {
      total += (nn - 1) * nn / 2 * (aa / mm);
      aa %= mm;
    }
    if (bb >= mm) {
      total += nn * (bb / mm);
      bb %= mm;
    }
    const Wide y_max = aa * nn + bb;
    if (y_max < mm) break;
    nn = y_max / mm;
    bb = y_max % mm;
    std::swap(mm, aa);
  }
  if (total > INT64_MAX) throw DomainError("floor_sum: result exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

}  // namespace twobridge::kernels
