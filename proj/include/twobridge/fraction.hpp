// SPDX-License-Identifier: Apache-2.0
//
// Schubert fractions p/q of 2-bridge knots and their Conway words.
//
// A Fraction p/q is always reduced with 0 < q < p, except the unknot which
// is the single value 1/0. The determinant p is odd for knots; even p
// denotes a 2-bridge link and is only produced under Parity::AllowEven.
//
// Conway words evaluate left to right as the continued fraction
//   [a1, ..., an] = a1 + 1/(a2 + 1/(... + 1/an)).
// The sign convention for entries at even positions is not universal, so
// results that distinguish a knot from its mirror image depend on it.
// Everything that identifies mirror pairs (the default) does not.
#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/arith.hpp"

namespace twobridge {

enum class Parity { KnotOnly, AllowEven };

/// Whether a knot and its mirror image count as the same class.
enum class MirrorPolicy { Identify, Distinguish };

class Fraction {
 public:
  static Fraction unknot() { return Fraction(1, 0); }

  Int p() const { return p_; }
  Int q() const { return q_; }
  Int determinant() const { return p_; }
  bool is_unknot() const { return p_ == 1; }
  bool is_knot() const { return p_ % 2 == 1; }

  /// "p/q"
  std::string str() const;
  /// Parses "p/q" (optionally "-p/q") and normalizes it.
  static Fraction parse(std::string_view text, Parity parity = Parity::KnotOnly);

  friend auto operator<=>(const Fraction&, const Fraction&) = default;
  friend Fraction normalize(Int numerator, Int denominator, Parity parity);

 private:
  Fraction(Int p, Int q) : p_(p), q_(q) {}
  Int p_;
  Int q_;
};

/// Reduces numerator/denominator to a Fraction. A negative value -p/q is
/// the mirror image and maps to p/(p - q mod p).
Fraction normalize(Int numerator, Int denominator, Parity parity = Parity::KnotOnly);

class ConwayWord {
 public:
  /// Throws DomainError on an empty word or a zero entry.
  explicit ConwayWord(std::vector<Int> entries);

  std::span<const Int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Int entry_sum() const;
  ConwayWord reversed() const;

  /// "C(a1,a2,...)"
  std::string str() const;
  /// Parses "C(a1,...)"; whitespace around entries is tolerated.
  static ConwayWord parse(std::string_view text);

  friend bool operator==(const ConwayWord&, const ConwayWord&) = default;

 private:
  std::vector<Int> entries_;
};

/// Mirror-insensitive (by default) equivalence class of a 2-bridge knot,
/// represented by the orbit member with the smallest q.
struct KnotClass {
  Fraction canonical = Fraction::unknot();
  Int determinant = 1;
  Int crossing = 0;
  bool amphicheiral = true;

  friend bool operator==(const KnotClass& a, const KnotClass& b) {
    return a.canonical == b.canonical;
  }
  friend auto operator<=>(const KnotClass& a, const KnotClass& b) {
    return a.canonical <=> b.canonical;
  }
};

/// Evaluates the continued fraction. Throws DomainError when the value is
/// zero or infinite, or when p is even and parity is KnotOnly.
Fraction cf_eval(const ConwayWord& word, Parity parity = Parity::KnotOnly);

/// All-positive expansion with last entry >= 2. Throws on the unknot.
ConwayWord cf_expand(const Fraction& f);

/// Residues q' with p/q' equivalent to f, sorted ascending.
std::vector<Int> orbit(const Fraction& f, MirrorPolicy policy = MirrorPolicy::Identify);

bool same_knot(const Fraction& a, const Fraction& b,
               MirrorPolicy policy = MirrorPolicy::Identify);

KnotClass canonical_class(const Fraction& f, MirrorPolicy policy = MirrorPolicy::Identify);

Fraction mirror(const Fraction& f);

/// q^2 = -1 (mod p). The unknot counts as amphicheiral.
bool is_amphicheiral(const Fraction& f);

}  // namespace twobridge
