// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numeric>

#include "twobridge/errors.hpp"

namespace twobridge {

using Int = std::int64_t;

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow");
  return out;
}

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow");
  return out;
}

inline Int abs_checked(Int a) { return a < 0 ? checked_mul(a, -1) : a; }

/// Least nonnegative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 2.
inline Int mod_inverse(Int a, Int m) {
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    Int t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("residue is not invertible");
  return mod(old_s, m);
}

/// Integer square root if n is a perfect square, otherwise -1.
inline Int exact_sqrt(Int n) {
  if (n < 0) return -1;
  Int lo = 0, hi = 3037000499;  // floor(sqrt(INT64_MAX))
  while (lo < hi) {
    const Int mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid - 1;
  }
  return lo * lo == n ? lo : -1;
}

}  // namespace twobridge
