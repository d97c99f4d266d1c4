// SPDX-License-Identifier: Apache-2.0
//
// The Casson-Gordon ribbon obstruction for a 2-bridge knot p^2/q.
//
// For r = 1 .. p-1 take the right triangle with vertices (0,0), (pr,0) and
// (pr, qr/p). Its weighted lattice count counts interior points as 1,
// points inside an edge as 1/2 and the two vertices other than the origin
// as 1/4 each (when they are lattice points); the origin counts 0. Then
//
//   sigma(p, q, r) = 4 * (area - weighted count),
//
// and a ribbon knot has sigma = +1 or -1 for every r. All quantities are
// kept as exact integers: the count in quarters, the area in halves.
#pragma once

#include <optional>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/kernels.hpp"

namespace twobridge {

/// Weighted lattice count in units of 1/4.
struct QuarterCount {
  Int quarters = 0;
  friend auto operator<=>(const QuarterCount&, const QuarterCount&) = default;
};

enum class CountMethod {
  Column,    ///< one floor per column, SIMD dispatched
  FloorSum,  ///< Euclidean recursion, logarithmic
};

struct SigmaTerm {
  Int r = 0;
  Int area_halves = 0;  ///< 2 * area = q * r^2
  QuarterCount count;
  Int sigma = 0;
};

struct SigmaReport {
  Int p = 0;
  Int q = 0;
  std::vector<SigmaTerm> terms;
  bool passes = false;
  std::optional<Int> first_failure;
};

/// Ground truth by enumerating the triangle's bounding box with exact
/// membership tests. Cost is proportional to p*r * q*r/p.
QuarterCount weighted_count_oracle(Int p, Int q, Int r);

/// Column decomposition of the same count.
QuarterCount weighted_count(Int p, Int q, Int r, CountMethod method = CountMethod::Column,
                            kernels::Isa isa = kernels::best_isa());

/// 2*q*r^2 - quarters.
Int sigma(Int p, Int q, Int r, CountMethod method = CountMethod::Column);

SigmaTerm sigma_term(Int p, Int q, Int r, CountMethod method = CountMethod::Column);

/// Evaluates r = 1 .. p-1, stopping at the first failing r when early_exit.
SigmaReport cg_condition(Int p, Int q, bool early_exit = false,
                         CountMethod method = CountMethod::FloorSum);

namespace detail {

/// Count for any p >= 2, q >= 1, r >= 1 with no coprimality requirement;
/// handles hypotenuse lattice points and a lattice apex. The public entry
/// points call this and reject those cases as unreachable.
struct CountBreakdown {
  Int quarters = 0;
  Int hypotenuse_points = 0;  ///< lattice points strictly inside the hypotenuse
  bool lattice_apex = false;
};
CountBreakdown weighted_count_general(Int p, Int q, Int r, CountMethod method, kernels::Isa isa);

/// Bounding-box enumeration without preconditions beyond p >= 2, q, r >= 1.
Int weighted_count_bruteforce(Int p, Int q, Int r);

}  // namespace detail
}  // namespace twobridge
