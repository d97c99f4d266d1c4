// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>

#include "twobridge/casson_gordon.hpp"
#include "twobridge/families.hpp"

using namespace twobridge;

namespace {

Fraction frac(Int p, Int q) { return normalize(p, q, Parity::AllowEven); }

GeneratedKnot gen(FamilyId f, std::vector<Int> params) { return generate(f, params); }

bool contains(const std::vector<FamilyId>& v, FamilyId f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

TEST_CASE("generate") {
  const auto six_one = gen(FamilyId::Family0, {2});
  CHECK(six_one.word.str() == "C(2,4)");
  CHECK(six_one.fraction.str() == "9/4");
  CHECK_FALSE(six_one.is_link());

  const auto f2 = gen(FamilyId::Family2, {1, 1});
  CHECK(f2.word.str() == "C(2,2,2,2,2,2)");
  CHECK(f2.fraction.str() == "169/70");

  const auto f1 = gen(FamilyId::Family1, {1, -1});
  CHECK(f1.word.str() == "C(2,2,-2,-2,-2,-2)");
  CHECK(f1.fraction.str() == "121/46");

  CHECK(gen(FamilyId::Family0, {1, 2}).word.str() == "C(1,2,4,1)");
  const auto link = gen(FamilyId::Family0, {3});
  CHECK(link.fraction.str() == "16/5");
  CHECK(link.is_link());

  CHECK_THROWS_WITH_AS(gen(FamilyId::Family1, {0, 1}), doctest::Contains("a,b != 0"), DomainError);
  CHECK_THROWS_AS(gen(FamilyId::Family2, {1, 0}), DomainError);
  CHECK_THROWS_AS(gen(FamilyId::Family1, {1}), DomainError);
  CHECK_THROWS_AS(gen(FamilyId::Family0, {}), DomainError);
  CHECK_THROWS_AS(gen(FamilyId::Family0, {1, 0}), DomainError);
  CHECK_THROWS_AS(gen(FamilyId::Family0, {-2}), DomainError);
}

TEST_CASE("determinant closed forms of families 1 and 2") {
  for (Int a = -40; a <= 40; ++a) {
    for (Int b = -40; b <= 40; ++b) {
      if (a == 0 || b == 0) continue;
      const Int p1 = std::abs(8 * a * b + 2 * b - 1);
      const Int p2 = std::abs(8 * a * b + 2 * a + 2 * b + 1);
      REQUIRE(gen(FamilyId::Family1, {a, b}).fraction.p() == p1 * p1);
      REQUIRE(gen(FamilyId::Family2, {a, b}).fraction.p() == p2 * p2);
      REQUIRE(p1 >= 6 * std::max(std::abs(a), std::abs(b)) - 3);
      REQUIRE(p2 >= 6 * std::max(std::abs(a), std::abs(b)) - 3);
    }
  }
}

TEST_CASE("lemma_conditions") {
  using C = LemmaCondition;
  CHECK(lemma_conditions(11, 84) ==
        std::vector<LemmaMatch>{{C::II, 1, 7, std::nullopt}, {C::IV, -1, 4, 3}});
  CHECK(lemma_conditions(11, 46) == std::vector<LemmaMatch>{{C::IV, 1, 2, 5}});
  // n = 1 also divides p + 1 = 4 and is odd, so iii holds alongside i and ii.
  CHECK(lemma_conditions(3, 4) == std::vector<LemmaMatch>{{C::I, 1, 1, std::nullopt},
                                                          {C::II, 1, 1, std::nullopt},
                                                          {C::III, 1, 1, std::nullopt}});
  CHECK(lemma_conditions(5, 2).empty());
  // q = 1 would need n = 0 in condition i.
  CHECK(lemma_conditions(5, 1).empty());
  CHECK_THROWS_AS(lemma_conditions(4, 3), DomainError);
  CHECK_THROWS_AS(lemma_conditions(5, 10), DomainError);
  CHECK_THROWS_AS(lemma_conditions(5, 25), DomainError);
}

TEST_CASE("square_orbit") {
  CHECK(square_orbit(3, 4) == std::vector<Int>{2, 4, 5, 7});
  CHECK(square_orbit(5, 7) == std::vector<Int>{7, 18});
}

TEST_CASE("is_family_member") {
  const auto m46 = is_family_member(11, 46);
  CHECK(m46.member);
  CHECK(m46.generator_families == std::vector<FamilyId>{FamilyId::Family1});
  bool via_iv = false;
  for (const auto& t : m46.lemma_matches) {
    via_iv = via_iv || (t.representative == 46 && t.match.condition == LemmaCondition::IV);
  }
  CHECK(via_iv);

  const auto m18 = is_family_member(5, 18);
  CHECK(m18.member);
  CHECK(m18.generator_families == std::vector<FamilyId>{FamilyId::Family1, FamilyId::Family2});
  CHECK(same_knot(gen(FamilyId::Family1, {-1, -1}).fraction, frac(25, 18)));

  const auto m2 = is_family_member(5, 2);
  CHECK_FALSE(m2.member);
  CHECK(m2.lemma_matches.empty());
  CHECK(m2.generator_families.empty());
  CHECK_FALSE(m2.partial);

  const auto skip = is_family_member(11, 46, GeneratorLookup::Skip);
  CHECK(skip.member);
  CHECK(skip.generator_families.empty());
}

TEST_CASE("partial_knot") {
  const KnotClass p84 = partial_knot(11, 84);
  CHECK(same_knot(p84.canonical, frac(11, 4)));
  CHECK(same_knot(p84.canonical, frac(11, 7)));
  CHECK(cf_expand(frac(11, 4)).str() == "C(2,1,3)");
  CHECK(p84.crossing == 6);

  CHECK(partial_knot(3, 4).canonical.str() == "3/1");
  CHECK(same_knot(partial_knot(13, 70).canonical, frac(13, 5)));
  CHECK(cf_eval(ConwayWord({2, 1, 1, 2})) == frac(13, 5));

  CHECK_THROWS_AS(partial_knot(5, 2), DomainError);
}

TEST_CASE("family0_identity_holds") {
  const Int x2[] = {2};
  CHECK(family0_identity_holds(x2));
  CHECK(cf_eval(ConwayWord({3, 1}), Parity::AllowEven).str() == "4/1");
  CHECK(cf_eval(ConwayWord({2, 1, -2}), Parity::AllowEven).str() == "4/1");

  const Int a1x2[] = {1, 2};
  CHECK(family0_identity_holds(a1x2));
  CHECK(cf_eval(ConwayWord({1, 3, 1, 1})).str() == "9/7");
  CHECK(cf_eval(ConwayWord({1, 2, 1, -2, -1})).str() == "9/7");

  const Int a2x3[] = {2, 3};
  CHECK(family0_identity_holds(a2x3));
  CHECK(cf_eval(ConwayWord({2, 4, 2, 2})).str() == "49/22");
  CHECK(cf_eval(ConwayWord({2, 3, 1, -3, -2})).str() == "49/22");

  const Int x1[] = {1};
  CHECK_THROWS_AS(family0_identity_holds(x1), DomainError);
  CHECK_THROWS_AS(family0_identity_holds(std::span<const Int>{}), DomainError);
}

TEST_CASE("family 1 with a = -1 is family 2 with a = -1") {
  for (Int b = -6; b <= 6; ++b) {
    if (b == 0) continue;
    const auto one = gen(FamilyId::Family1, {-1, b});
    const auto two = gen(FamilyId::Family2, {-1, b});
    CHECK(one.word == two.word);
    CHECK(canonical_class(one.fraction) == canonical_class(two.fraction));
    // Family 2 is symmetric under a <-> b up to mirror, so b = -1 lands here too.
    CHECK(canonical_class(gen(FamilyId::Family2, {b, -1}).fraction) == canonical_class(two.fraction));
  }
}

TEST_CASE("generated family knots are members with the right generator") {
  int count = 0;
  for_each_family_knot(GeneratorBounds{19, 19}, [&](const GeneratedKnot& k, FamilyId f) {
    const KnotClass cls = canonical_class(k.fraction);
    if (cls.crossing > 19) return;
    const Int p = exact_sqrt(k.fraction.p());
    REQUIRE(p > 0);
    const auto m = is_family_member(p, k.fraction.q());
    REQUIRE(m.member);
    REQUIRE(contains(m.generator_families, f));
    ++count;
  });
  CHECK(count > 100);
}

TEST_CASE("fraction conditions and generators agree on every knot p^2/q with p <= 19") {
  // is_family_member with generator lookup throws if they disagree.
  int members = 0, strict_disagreements = 0;
  for (Int p = 3; p <= 19; p += 2) {
    for (Int q = 1; q < p * p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto m = is_family_member(p, q);
      REQUIRE(m.member == !m.generator_families.empty());
      if (!m.member) continue;
      ++members;
      REQUIRE(m.partial->determinant == p);
      strict_disagreements += !m.strict_partials_agree;
    }
  }
  CHECK(members > 0);
  MESSAGE("members: " << members << ", with chirality-dependent partial knots: " << strict_disagreements);
}

TEST_CASE("determinant squaring for generated knots with entry sum <= 24") {
  auto check = [](const GeneratedKnot& k) {
    Int abs_sum = 0;
    for (Int a : k.word.entries()) abs_sum += std::abs(a);
    if (abs_sum > 24 || k.is_link()) return;
    const Int p = exact_sqrt(k.fraction.p());
    REQUIRE(p > 0);
    REQUIRE(p % 2 == 1);
    REQUIRE(partial_knot(p, k.fraction.q()).determinant == p);
  };
  for_each_family_knot(GeneratorBounds{24, 6}, [&](const GeneratedKnot& k, FamilyId) { check(k); });
}

TEST_CASE("family members pass the Casson-Gordon condition") {
  for (Int p = 3; p <= 25; p += 2) {
    for (Int q = 1; q < p * p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (!is_family_member(p, q, GeneratorLookup::Skip).member) continue;
      REQUIRE(cg_condition(p, q).passes);
    }
  }
}
