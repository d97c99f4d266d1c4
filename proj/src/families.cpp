// SPDX-License-Identifier: Apache-2.0
#include "twobridge/families.hpp"

#include <algorithm>
#include <string>

namespace twobridge {
namespace {

void check_knot_args(Int p, Int q) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be odd and at least 3");
  if (p > 3037000499) throw DomainError("p too large");
  if (q <= 0 || q >= p * p) throw DomainError("q must satisfy 0 < q < p^2");
  if (std::gcd(q, p) != 1) throw DomainError("q must be coprime to p");
}

std::vector<Int> family0_entries(std::span<const Int> prefix, Int x) {
  std::vector<Int> entries(prefix.begin(), prefix.end());
  entries.push_back(x);
  entries.push_back(x + 2);
  entries.insert(entries.end(), prefix.rbegin(), prefix.rend());
  return entries;
}

Int determinant_of(std::vector<Int> entries) {
  return cf_eval(ConwayWord(std::move(entries)), Parity::AllowEven).p();
}

// Family0 words with determinant exactly target. For positive words the
// determinant grows with every entry and with every inserted entry, so
// (prefix, v, 1, 3, v, prefix reversed) bounds all extensions by v.
void family0_by_determinant(std::vector<Int>& prefix, Int target,
                            const std::function<void(const GeneratedKnot&)>& visit) {
  for (Int x = 1;; ++x) {
    auto entries = family0_entries(prefix, x);
    ConwayWord word(std::move(entries));
    const Fraction f = cf_eval(word, Parity::AllowEven);
    if (f.p() > target) break;
    if (f.p() == target) visit(GeneratedKnot{word, f});
  }
  for (Int v = 1;; ++v) {
    prefix.push_back(v);
    const bool in_range = determinant_of(family0_entries(prefix, 1)) <= target;
    if (in_range) family0_by_determinant(prefix, target, visit);
    prefix.pop_back();
    if (!in_range) break;
  }
}

void family0_by_sum(std::vector<Int>& prefix, Int budget,
                    const std::function<void(const GeneratedKnot&)>& visit) {
  // Remaining budget is for x plus further prefix entries, each counted twice.
  for (Int x = 1; x <= budget; ++x) {
    ConwayWord word(family0_entries(prefix, x));
    visit(GeneratedKnot{word, cf_eval(word, Parity::AllowEven)});
  }
  for (Int v = 1; v < budget; ++v) {
    prefix.push_back(v);
    family0_by_sum(prefix, budget - v, visit);
    prefix.pop_back();
  }
}

KnotClass class_of_partial(Int p, Int n, MirrorPolicy policy) {
  if (std::gcd(n, p) != 1) {
    throw InternalError("partial-knot parameter n=" + std::to_string(n) +
                        " is not coprime to p=" + std::to_string(p));
  }
  return canonical_class(normalize(p, n), policy);
}

}  // namespace

std::string_view family_label(FamilyId id) {
  switch (id) {
    case FamilyId::Family0: return "0";
    case FamilyId::Family1: return "1";
    case FamilyId::Family2: return "2";
  }
  return "?";
}

std::string_view condition_label(LemmaCondition c) {
  switch (c) {
    case LemmaCondition::I: return "i";
    case LemmaCondition::II: return "ii";
    case LemmaCondition::III: return "iii";
    case LemmaCondition::IV: return "iv";
  }
  return "?";
}

GeneratedKnot generate(FamilyId family, std::span<const Int> params) {
  std::vector<Int> entries;
  if (family == FamilyId::Family0) {
    if (params.empty()) throw DomainError("family 0 needs at least one parameter");
    if (std::ranges::any_of(params, [](Int v) { return v < 1; })) {
      throw DomainError("family 0 parameters must be positive");
    }
    entries = family0_entries(params.first(params.size() - 1), params.back());
  } else {
    if (params.size() != 2) throw DomainError("families 1 and 2 take exactly two parameters a,b");
    const Int a = params[0], b = params[1];
    if (a == 0 || b == 0) throw DomainError("family parameters must satisfy a,b != 0");
    const Int a2 = checked_mul(2, a), b2 = checked_mul(2, b);
    if (family == FamilyId::Family1) {
      entries = {a2, 2, b2, -2, -a2, b2};
    } else {
      entries = {a2, 2, b2, a2, 2, b2};
    }
  }
  ConwayWord word(std::move(entries));
  Fraction f = cf_eval(word, Parity::AllowEven);
  return GeneratedKnot{std::move(word), f};
}

std::vector<LemmaMatch> lemma_conditions(Int p, Int q) {
  check_knot_args(p, q);
  std::vector<LemmaMatch> out;
  for (int s : {1, -1}) {
    if ((q - s) % p == 0) {
      const Int n = (q - s) / p;
      if (n > 0 && std::gcd(n, p) == 1) out.push_back({LemmaCondition::I, s, n, std::nullopt});
    }
  }
  for (int s : {1, -1}) {
    if (q % (p + s) == 0) {
      const Int n = q / (p + s);
      if ((2 * p - s) % n == 0) out.push_back({LemmaCondition::II, s, n, std::nullopt});
    }
  }
  for (int s : {1, -1}) {
    if (q % (p + s) == 0) {
      const Int n = q / (p + s);
      if (n % 2 == 1 && (p + s) % n == 0) out.push_back({LemmaCondition::III, s, n, std::nullopt});
    }
  }
  for (int s : {1, -1}) {
    if (q % (2 * p + s) == 0) {
      const Int n = q / (2 * p + s);
      if ((p - s) % n == 0 && ((p - s) / n) % 2 == 1) {
        out.push_back({LemmaCondition::IV, s, n, (p - s) / n});
      }
    }
  }
  return out;
}

std::vector<Int> square_orbit(Int p, Int q) {
  check_knot_args(p, q);
  const Int m = p * p;
  const Int inv = mod_inverse(q, m);
  std::vector<Int> out{q, inv, m - q, m - inv};
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FamilyId> generator_families(Int p, Int q) {
  check_knot_args(p, q);
  const Int target = p * p;
  const KnotClass wanted = canonical_class(normalize(target, q));
  std::vector<FamilyId> out;
  auto note = [&](const GeneratedKnot& k, FamilyId f) {
    if (k.fraction.p() == target && canonical_class(k.fraction) == wanted &&
        std::ranges::find(out, f) == out.end()) {
      out.push_back(f);
    }
  };
  std::vector<Int> prefix;
  family0_by_determinant(prefix, target, [&](const GeneratedKnot& k) { note(k, FamilyId::Family0); });
  // sqrt(det) is |8ab + 2b - 1| for family 1 and |8ab + 2a + 2b + 1| for
  // family 2; both exceed 6*max(|a|,|b|) - 3.
  const Int bound = (p + 3) / 6 + 1;
  for (Int a = -bound; a <= bound; ++a) {
    for (Int b = -bound; b <= bound; ++b) {
      if (a == 0 || b == 0) continue;
      const Int params[] = {a, b};
      for (FamilyId f : {FamilyId::Family1, FamilyId::Family2}) note(generate(f, params), f);
    }
  }
  std::ranges::sort(out);
  return out;
}

FamilyMembership is_family_member(Int p, Int q, GeneratorLookup lookup) {
  FamilyMembership out;
  out.p = p;
  out.q = q;
  for (Int rep : square_orbit(p, q)) {
    for (const LemmaMatch& m : lemma_conditions(p, rep)) out.lemma_matches.push_back({rep, m});
  }
  out.member = !out.lemma_matches.empty();

  if (out.member) {
    const KnotClass first = class_of_partial(p, out.lemma_matches.front().match.n, MirrorPolicy::Identify);
    const KnotClass first_strict =
        class_of_partial(p, out.lemma_matches.front().match.n, MirrorPolicy::Distinguish);
    for (const TaggedMatch& t : out.lemma_matches) {
      if (class_of_partial(p, t.match.n, MirrorPolicy::Identify) != first) {
        throw InternalError("partial knots disagree for " + std::to_string(p * p) + "/" +
                            std::to_string(q));
      }
      if (class_of_partial(p, t.match.n, MirrorPolicy::Distinguish) != first_strict) {
        out.strict_partials_agree = false;
      }
    }
    out.partial = first;
  }

  if (lookup == GeneratorLookup::Enumerate) {
    out.generator_families = generator_families(p, q);
    if (out.generator_families.empty() == out.member) {
      throw InternalError("generator words and fraction conditions disagree for " +
                          std::to_string(p * p) + "/" + std::to_string(q));
    }
  }
  return out;
}

KnotClass partial_knot(Int p, Int q) {
  const FamilyMembership m = is_family_member(p, q, GeneratorLookup::Skip);
  if (!m.member) {
    throw DomainError(std::to_string(p * p) + "/" + std::to_string(q) +
                      " is not in any of the three families");
  }
  return *m.partial;
}

bool family0_identity_holds(std::span<const Int> params) {
  if (params.empty()) throw DomainError("need at least the parameter x");
  const auto prefix = params.first(params.size() - 1);
  const Int x = params.back();
  if (x < 2) throw DomainError("x must be at least 2 so that x-1 is a nonzero entry");
  if (std::ranges::any_of(prefix, [](Int v) { return v < 1; })) {
    throw DomainError("parameters must be positive");
  }
  std::vector<Int> lhs(prefix.begin(), prefix.end());
  lhs.push_back(x + 1);
  lhs.push_back(x - 1);
  lhs.insert(lhs.end(), prefix.rbegin(), prefix.rend());

  std::vector<Int> rhs(prefix.begin(), prefix.end());
  rhs.push_back(x);
  rhs.push_back(1);
  rhs.push_back(-x);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) rhs.push_back(-*it);

  const Fraction left = cf_eval(ConwayWord(std::move(lhs)), Parity::AllowEven);
  const Fraction right = cf_eval(ConwayWord(std::move(rhs)), Parity::AllowEven);
  return same_knot(left, right, MirrorPolicy::Identify);
}

namespace detail {

void family0_words(Int max_sum, const std::function<void(const GeneratedKnot&)>& visit) {
  // Word sum is 2 * (params) + 2.
  if (max_sum < 4) return;
  std::vector<Int> prefix;
  family0_by_sum(prefix, (max_sum - 2) / 2, visit);
}

}  // namespace detail
}  // namespace twobridge
