// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "twobridge/fraction.hpp"

using namespace twobridge;

namespace {

Fraction frac(Int p, Int q) { return normalize(p, q, Parity::AllowEven); }

std::vector<Int> positive_word_entries(std::mt19937_64& rng, std::size_t len, Int max_entry) {
  std::uniform_int_distribution<Int> dist(1, max_entry);
  std::vector<Int> w(len);
  for (auto& a : w) a = dist(rng);
  return w;
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize(121, 205) == frac(121, 84));
  CHECK(normalize(9, 4).str() == "9/4");
  CHECK_THROWS_WITH_AS(normalize(16, 11), doctest::Contains("two-bridge link"), DomainError);
  CHECK(normalize(16, 11, Parity::AllowEven).str() == "16/11");
  CHECK_THROWS_AS(normalize(0, 3), DomainError);

  SUBCASE("negative values absorb the mirror into q") {
    CHECK(normalize(-9, 4).str() == "9/5");
    CHECK(normalize(9, -4).str() == "9/5");
    CHECK(normalize(-9, -4).str() == "9/4");
    CHECK(normalize(9, 13).str() == "9/4");
    CHECK(normalize(-9, 13).str() == "9/5");
  }
  SUBCASE("unknot") {
    CHECK(normalize(1, 0) == Fraction::unknot());
    CHECK(normalize(7, 14) == Fraction::unknot());
    CHECK(normalize(-1, 5).is_unknot());
    CHECK(Fraction::unknot().str() == "1/0");
  }
  SUBCASE("reduction") {
    CHECK(normalize(27, 12).str() == "9/4");
    CHECK(normalize(33, 7).str() == "33/7");
  }
}

TEST_CASE("cf_eval") {
  CHECK(cf_eval(ConwayWord({2, 1, 3})).str() == "11/4");
  CHECK(cf_eval(ConwayWord({2, 2, 2, 2, 2, 2})).str() == "169/70");
  CHECK(cf_eval(ConwayWord({2, 1, -2}), Parity::AllowEven).str() == "4/1");
  CHECK_THROWS_WITH_AS(cf_eval(ConwayWord({2, 1, -2})), doctest::Contains("two-bridge link"), DomainError);
  CHECK(cf_eval(ConwayWord({1, 2, 4, 1}), Parity::AllowEven).str() == "16/11");
  CHECK(cf_eval(ConwayWord({2, 1, 1, 2})).str() == "13/5");

  SUBCASE("degenerate words") {
    // 1 + 1/(-1) = 0
    CHECK_THROWS_WITH_AS(cf_eval(ConwayWord({1, -1})), doctest::Contains("degenerate"), DomainError);
    // 2 + 1/(-1 + 1/1) = 2 + 1/0
    CHECK_THROWS_WITH_AS(cf_eval(ConwayWord({2, -1, 1})), doctest::Contains("degenerate"), DomainError);
  }
  SUBCASE("an intermediate zero passes through infinity") {
    // -1 + 1/1 = 0, then 3 + 1/0 = inf, then 1 + 1/inf = 1, then 2 + 1/1 = 3.
    CHECK(oracle::fold({2, 1, 3, -1, 1}).num == 3);
    CHECK(cf_eval(ConwayWord({2, 1, 3, -1, 1})).str() == "3/1");
  }
  SUBCASE("agrees with the right-to-left extended-rational fold") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> len(1, 9);
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
      std::vector<Int> w(len(rng));
      for (auto& a : w) {
        do a = entry(rng); while (a == 0);
      }
      const auto expect = oracle::fold(w);
      if (expect.den == 0 || expect.num == 0) {
        CHECK_THROWS_AS(cf_eval(ConwayWord(w), Parity::AllowEven), DomainError);
        continue;
      }
      const Fraction f = cf_eval(ConwayWord(w), Parity::AllowEven);
      CHECK(f == normalize(expect.num, expect.den, Parity::AllowEven));
      ++checked;
    }
    CHECK(checked > 15000);
  }
}

TEST_CASE("cf_expand") {
  CHECK(cf_expand(frac(11, 4)).str() == "C(2,1,3)");
  CHECK(cf_expand(frac(9, 5)).str() == "C(1,1,4)");
  CHECK(cf_expand(frac(121, 84)).str() == "C(1,2,3,1,2,3)");
  CHECK(cf_expand(frac(7, 1)).str() == "C(7)");
  CHECK_THROWS_AS(cf_expand(Fraction::unknot()), DomainError);
}

TEST_CASE("same_knot") {
  CHECK(same_knot(frac(11, 7), frac(11, 4), MirrorPolicy::Identify));
  CHECK_FALSE(same_knot(frac(11, 7), frac(11, 4), MirrorPolicy::Distinguish));
  CHECK(same_knot(frac(13, 5), frac(13, 8), MirrorPolicy::Distinguish));
  CHECK_FALSE(same_knot(frac(13, 5), frac(11, 5)));
  CHECK(same_knot(Fraction::unknot(), Fraction::unknot()));
}

TEST_CASE("canonical_class") {
  const KnotClass k = canonical_class(frac(9, 5));
  CHECK(orbit(frac(9, 5)) == std::vector<Int>{2, 4, 5, 7});
  CHECK(k.canonical.str() == "9/2");
  CHECK(k.crossing == 6);
  CHECK(k.determinant == 9);
  CHECK_FALSE(k.amphicheiral);

  const KnotClass u = canonical_class(Fraction::unknot());
  CHECK(u.canonical == Fraction::unknot());
  CHECK(u.crossing == 0);

  CHECK(canonical_class(frac(121, 46)).crossing == 11);

  // Without mirror identification the chiral pair stays apart.
  CHECK(canonical_class(frac(11, 4), MirrorPolicy::Distinguish).canonical.str() == "11/3");
  CHECK(canonical_class(frac(11, 7), MirrorPolicy::Distinguish).canonical.str() == "11/7");
}

TEST_CASE("mirror and amphicheirality") {
  CHECK(mirror(frac(9, 4)).str() == "9/5");
  CHECK(mirror(frac(13, 5)).str() == "13/8");
  CHECK(same_knot(frac(13, 5), mirror(frac(13, 5)), MirrorPolicy::Distinguish));
  CHECK(mirror(Fraction::unknot()) == Fraction::unknot());

  CHECK(is_amphicheiral(frac(13, 5)));
  CHECK(is_amphicheiral(frac(5, 2)));
  CHECK_FALSE(is_amphicheiral(frac(9, 4)));
  CHECK(is_amphicheiral(Fraction::unknot()));
}

TEST_CASE("text forms") {
  CHECK(Fraction::parse("121/84").str() == "121/84");
  CHECK(Fraction::parse("-9/4").str() == "9/5");
  CHECK_THROWS_AS(Fraction::parse("121"), DomainError);
  CHECK_THROWS_AS(Fraction::parse("12x/5"), DomainError);
  CHECK_THROWS_AS(Fraction::parse("16/11"), DomainError);

  CHECK(ConwayWord::parse("C(2,-2,3)").str() == "C(2,-2,3)");
  CHECK(ConwayWord::parse(" C( 2, -2 ,3 ) ").str() == "C(2,-2,3)");
  CHECK_THROWS_AS(ConwayWord::parse("C()"), DomainError);
  CHECK_THROWS_AS(ConwayWord::parse("C(1,0)"), DomainError);
  CHECK_THROWS_AS(ConwayWord::parse("(1,2)"), DomainError);
  CHECK_THROWS_AS(ConwayWord::parse("C(1,,2)"), DomainError);
  CHECK_THROWS_AS(ConwayWord({}), DomainError);
}

TEST_CASE("expansion round trip for p <= 1000") {
  for (Int p = 3; p <= 1000; p += 2) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction f = frac(p, q);
      const ConwayWord w = cf_expand(f);
      REQUIRE(cf_eval(w) == f);
      REQUIRE(std::ranges::all_of(w.entries(), [](Int a) { return a >= 1; }));
      REQUIRE(w.entries().back() >= 2);
    }
  }
}

TEST_CASE("crossing and determinant are orbit invariants for p <= 500") {
  for (Int p = 3; p <= 500; p += 2) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction f = frac(p, q);
      const Int crossing = cf_expand(f).entry_sum();
      for (Int rep : orbit(f)) {
        const Fraction g = frac(p, rep);
        REQUIRE(cf_expand(g).entry_sum() == crossing);
        REQUIRE(canonical_class(g) == canonical_class(f));
        REQUIRE(canonical_class(g).determinant == p);
      }
      REQUIRE(canonical_class(f).crossing == crossing);
    }
  }
}

TEST_CASE("reversing a positive word gives the same knot") {
  // Every word over {1,2,3} of length <= 8, plus random wider entries.
  std::vector<std::vector<Int>> words;
  for (std::size_t len = 1; len <= 8; ++len) {
    std::vector<Int> w(len, 1);
    while (true) {
      words.push_back(w);
      std::size_t i = 0;
      while (i < len && w[i] == 3) w[i++] = 1;
      if (i == len) break;
      ++w[i];
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) words.push_back(positive_word_entries(rng, 1 + i % 8, 40));
  for (const auto& entries : words) {
    const ConwayWord w(entries);
    REQUIRE(same_knot(cf_eval(w, Parity::AllowEven), cf_eval(w.reversed(), Parity::AllowEven),
                      MirrorPolicy::Identify));
  }
}

TEST_CASE("q^2 = -1 mod p iff some orbit member has an even-length palindromic expansion") {
  int amphicheiral = 0;
  for (Int p = 3; p <= 700; p += 2) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const KnotClass k = canonical_class(frac(p, q));
      if (k.canonical.q() != q || k.crossing > 14) continue;
      bool palindrome = false;
      for (Int rep : orbit(k.canonical)) {
        const ConwayWord w = cf_expand(frac(p, rep));
        palindrome = palindrome || (w.size() % 2 == 0 && w == w.reversed());
      }
      REQUIRE(k.amphicheiral == palindrome);
      amphicheiral += k.amphicheiral;
    }
  }
  // 1 + 1 + 3 + 5 + 11 + 21 amphicheiral classes with crossing 4, 6, ..., 14.
  CHECK(amphicheiral == 42);
}

TEST_CASE("even determinants are rejected exactly under KnotOnly") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const ConwayWord w(positive_word_entries(rng, 1 + i % 7, 9));
    const Fraction f = cf_eval(w, Parity::AllowEven);
    if (f.p() % 2 == 1) {
      CHECK_NOTHROW(cf_eval(w));
    } else {
      CHECK_THROWS_AS(cf_eval(w), DomainError);
    }
  }
}
