// SPDX-License-Identifier: Apache-2.0
#include "twobridge/casson_gordon.hpp"

#include <string>

namespace twobridge {
namespace {

// 0 < q < p^2, gcd(q, p) = 1, 1 <= r <= p - 1, p >= 2.
void check_triangle_args(Int p, Int q, Int r) {
  if (p < 2) throw DomainError("p must be at least 2");
  if (p > 3037000499 / 2) throw DomainError("p too large");
  if (q <= 0 || q >= p * p) throw DomainError("q must satisfy 0 < q < p^2");
  if (std::gcd(q, p) != 1) throw DomainError("q must be coprime to p");
  if (r < 1 || r > p - 1) throw DomainError("r must satisfy 1 <= r <= p-1");
}

}  // namespace

namespace detail {

Int weighted_count_bruteforce(Int p, Int q, Int r) {
  const Int width = p * r;  // right edge x = pr
  const Int m = p * p;      // hypotenuse y = q*x/m
  Int quarters = 0;
  for (Int x = 0; x <= width; ++x) {
    const Int y_top = (q * x) / m;
    for (Int y = 0; y <= y_top; ++y) {
      if (x == 0 && y == 0) continue;
      const int edges = (y == 0) + (x == width) + (y * m == q * x);
      quarters += edges == 0 ? 4 : edges == 1 ? 2 : 1;
    }
  }
  return quarters;
}

CountBreakdown weighted_count_general(Int p, Int q, Int r, CountMethod method, kernels::Isa isa) {
  const Int width = p * r;
  const Int m = p * p;
  CountBreakdown out;

  // Columns 0 < x < pr: points 1 <= y <= floor(qx/m); those with y*m = q*x
  // lie on the hypotenuse. Such x are the multiples of m / gcd(q, m).
  const Int below_line = method == CountMethod::FloorSum
                             ? kernels::floor_sum(width, m, q, 0)
                             : kernels::column_floor_sum(width, m, q, isa);
  out.hypotenuse_points = (width - 1) / (m / std::gcd(q, m));
  const Int interior = below_line - out.hypotenuse_points;

  // Right edge x = pr, 0 < y < qr/p.
  out.lattice_apex = (q * r) % p == 0;
  const Int right_edge = out.lattice_apex ? (q * r) / p - 1 : (q * r) / p;

  out.quarters = 4 * interior + 2 * out.hypotenuse_points  // open strip
                 + 2 * (width - 1) + 1                     // bottom edge, vertex (pr,0)
                 + 2 * right_edge + (out.lattice_apex ? 1 : 0);
  return out;
}

}  // namespace detail

QuarterCount weighted_count_oracle(Int p, Int q, Int r) {
  check_triangle_args(p, q, r);
  return {detail::weighted_count_bruteforce(p, q, r)};
}

QuarterCount weighted_count(Int p, Int q, Int r, CountMethod method, kernels::Isa isa) {
  check_triangle_args(p, q, r);
  const auto parts = detail::weighted_count_general(p, q, r, method, isa);
  if (parts.hypotenuse_points != 0 || parts.lattice_apex) {
    throw InternalError("lattice point on the hypotenuse for p=" + std::to_string(p) +
                        " q=" + std::to_string(q) + " r=" + std::to_string(r));
  }
  return {parts.quarters};
}

SigmaTerm sigma_term(Int p, Int q, Int r, CountMethod method) {
  SigmaTerm term;
  term.r = r;
  term.count = weighted_count(p, q, r, method);
  term.area_halves = checked_mul(q, checked_mul(r, r));
  term.sigma = checked_mul(2, term.area_halves) - term.count.quarters;
  return term;
}

Int sigma(Int p, Int q, Int r, CountMethod method) { return sigma_term(p, q, r, method).sigma; }

SigmaReport cg_condition(Int p, Int q, bool early_exit, CountMethod method) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be odd and at least 3");
  SigmaReport report;
  report.p = p;
  report.q = q;
  for (Int r = 1; r < p; ++r) {
    report.terms.push_back(sigma_term(p, q, r, method));
    const Int s = report.terms.back().sigma;
    if (s != 1 && s != -1 && !report.first_failure) {
      report.first_failure = r;
      if (early_exit) break;
    }
  }
  report.passes = !report.first_failure.has_value();
  return report;
}

}  // namespace twobridge
