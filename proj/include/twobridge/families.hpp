// SPDX-License-Identifier: Apache-2.0
//
// The three known families of 2-bridge ribbon knots (up to mirror image):
//
//   Family 0: C(a, b, ..., w, x, x+2, w, ..., b, a), all parameters > 0
//   Family 1: C(2a, 2, 2b, -2, -2a, 2b),            a, b != 0
//   Family 2: C(2a, 2, 2b, 2a, 2, 2b),              a, b != 0
//
// and their arithmetic characterization: a knot p^2/q belongs to one of
// the families iff some q' equivalent to q (mod p^2, mirrors included)
// satisfies one of
//
//   i   q = n p + s,          gcd(n, p) = 1
//   ii  q = n (p + s),        n | 2p - s
//   iii q = n (p + s),        n | p + s, n odd
//   iv  q = n (2p + s),       d n = p - s, d odd
//
// for a sign s = +1 or -1. The partial knot of the symmetric union built
// from a member is then p/n, independent of which match supplies n.
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "twobridge/fraction.hpp"

namespace twobridge {

enum class FamilyId { Family0 = 0, Family1 = 1, Family2 = 2 };

std::string_view family_label(FamilyId id);  // "0", "1", "2"

struct GeneratedKnot {
  ConwayWord word;
  Fraction fraction;  ///< even p marks a 2-bridge link
  bool is_link() const { return !fraction.is_knot(); }
};

/// Family0 takes (a, ..., w, x), all >= 1; Families 1 and 2 take (a, b).
GeneratedKnot generate(FamilyId family, std::span<const Int> params);

enum class LemmaCondition { I = 1, II = 2, III = 3, IV = 4 };

std::string_view condition_label(LemmaCondition c);  // "i" .. "iv"

struct LemmaMatch {
  LemmaCondition condition = LemmaCondition::I;
  int sign = 1;
  Int n = 0;
  std::optional<Int> d;  ///< condition iv only

  friend bool operator==(const LemmaMatch&, const LemmaMatch&) = default;
};

/// Matches for q itself (no orbit closure), ordered i+, i-, ii+, ..., iv-.
/// Requires p odd >= 3, 0 < q < p^2, gcd(q, p) = 1.
std::vector<LemmaMatch> lemma_conditions(Int p, Int q);

struct TaggedMatch {
  Int representative = 0;  ///< the orbit member q' the match was found for
  LemmaMatch match;
};

enum class GeneratorLookup { Skip, Enumerate };

struct FamilyMembership {
  Int p = 0;
  Int q = 0;
  bool member = false;
  std::vector<FamilyId> generator_families;  ///< empty under GeneratorLookup::Skip
  std::vector<TaggedMatch> lemma_matches;
  std::optional<KnotClass> partial;
  /// Whether every match yields the same partial knot even when mirror
  /// images are told apart.
  bool strict_partials_agree = true;
};

/// Orbit of q under inversion and negation modulo p^2, sorted.
std::vector<Int> square_orbit(Int p, Int q);

FamilyMembership is_family_member(Int p, Int q,
                                  GeneratorLookup lookup = GeneratorLookup::Enumerate);

/// Families whose generated words realize the class of p^2/q. Enumerates
/// every generator word with determinant exactly p^2.
std::vector<FamilyId> generator_families(Int p, Int q);

/// Partial knot p/n of a family member. Throws DomainError for non-members
/// and InternalError if two matches disagree up to mirror.
KnotClass partial_knot(Int p, Int q);

/// C(a,...,w,x+1,x-1,w,...,a) and C(a,...,w,x,1,-x,-w,...,-a) are the same
/// knot (or link). params = (a, ..., w, x) with entries >= 1 and x >= 2.
bool family0_identity_holds(std::span<const Int> params);

struct GeneratorBounds {
  Int family0_max_sum = 0;  ///< bound on the Family0 word's entry sum
  Int ab_max = 0;           ///< bound on |a|, |b| for Families 1 and 2
};

namespace detail {
/// All Family0 words (knots and links) with entry sum <= max_sum.
void family0_words(Int max_sum, const std::function<void(const GeneratedKnot&)>& visit);
}  // namespace detail

/// Calls visit(knot, family) for every odd-determinant family word within
/// the bounds.
template <typename Visit>
void for_each_family_knot(const GeneratorBounds& bounds, Visit&& visit) {
  detail::family0_words(bounds.family0_max_sum, [&](const GeneratedKnot& k) {
    if (!k.is_link()) visit(k, FamilyId::Family0);
  });
  for (Int a = -bounds.ab_max; a <= bounds.ab_max; ++a) {
    for (Int b = -bounds.ab_max; b <= bounds.ab_max; ++b) {
      if (a == 0 || b == 0) continue;
      const Int params[] = {a, b};
      for (FamilyId f : {FamilyId::Family1, FamilyId::Family2}) {
        auto k = generate(f, params);
        if (!k.is_link()) visit(k, f);
      }
    }
  }
}

}  // namespace twobridge
