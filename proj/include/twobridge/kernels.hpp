// SPDX-License-Identifier: Apache-2.0
//
// Inner loops of the weighted lattice count.
//
// column_floor_sum(n, m, a) = sum over x = 1 .. n-1 of floor(a*x / m),
// the number of lattice points strictly above the x-axis and on or below
// the line y = a*x/m in the open strip 0 < x < n. The scalar variant is
// the reference; the AVX2 variant must agree with it bit for bit and is
// selected at runtime when the CPU supports it.
//
// floor_sum is the logarithmic Euclidean-recursion evaluation of the same
// quantity and serves as the fast path for scans.
#pragma once

#include <cstdint>
#include <string_view>

namespace twobridge::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// True when this build carries an AVX2 variant and the CPU can run it.
bool avx2_available();

/// Best variant available at runtime.
Isa best_isa();

/// Requires n >= 0, m >= 1, a >= 0 and a*n < 2^62.
std::int64_t column_floor_sum_scalar(std::int64_t n, std::int64_t m, std::int64_t a);

/// Same contract; falls back to scalar when a*n >= 2^52 (double exactness).
/// Only callable when avx2_available().
std::int64_t column_floor_sum_avx2(std::int64_t n, std::int64_t m, std::int64_t a);

/// Dispatches to the requested variant (Avx2 silently degrades to Scalar
/// when unavailable).
std::int64_t column_floor_sum(std::int64_t n, std::int64_t m, std::int64_t a,
                              Isa isa = best_isa());

/// sum over i = 0 .. n-1 of floor((a*i + b) / m); n >= 0, m >= 1, a, b >= 0.
/// Intermediates use 128-bit arithmetic.
std::int64_t floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b);

}  // namespace twobridge::kernels
