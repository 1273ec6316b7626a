#include <catch2/catch_amalgamated.hpp>

#include "bifix/episturmian.hpp"
#include "bifix/factor_set.hpp"
#include "oracles.hpp"

using namespace bifix;

namespace {
std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end(), shortlex_less);
  return v;
}
} // namespace

TEST_CASE("building factor windows") {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 8);
  CHECK(fib.words_of_length(1) == std::vector<Word>{"a", "b"});
  CHECK(fib.words_of_length(2) == std::vector<Word>{"aa", "ab", "ba"});
  CHECK(fib.stabilized());

  FactorSet tm = FactorSet::build(thue_morse_generator(), 8);
  CHECK(tm.words_of_length(2) == std::vector<Word>{"aa", "ab", "ba", "bb"});

  FactorSet trib = FactorSet::build(tribonacci_generator(), 8);
  CHECK(trib.words_of_length(2).size() == 5);

  SECTION("agrees with a brute-force scan of a long prefix") {
    Word prefix = tribonacci_generator().prefix(10000);
    for (size_t l = 1; l <= 6; ++l) {
      auto brute = oracles::brute_factors(prefix, l);
      CHECK(std::vector<Word>(brute.begin(), brute.end()) == trib.words_of_length(l));
    }
  }
}

TEST_CASE("queries") {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 8);
  auto qb = fib.query("b");
  CHECK(qb.member);
  CHECK(qb.right_order == 1); // only ba extends b on the right
  CHECK(qb.left_order == 1);  // and only ab on the left (bb is not a factor)
  CHECK_FALSE(fib.query("bb").member);
  auto q1 = fib.query("");
  CHECK(q1.member);
  CHECK(q1.right_order == 2);
  CHECK(q1.left_order == 2);
  CHECK_THROWS_AS(fib.query("abaababa"), WindowError);
}

TEST_CASE("special words") {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 10);
  auto r1 = fib.special_words(1, Side::right);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].word == "a");
  CHECK(r1[0].strict);
  auto l3 = fib.special_words(3, Side::left);
  REQUIRE(l3.size() == 1);
  CHECK(l3[0].word == "aba");
  auto r3 = fib.special_words(3, Side::right);
  REQUIRE(r3.size() == 1);
  CHECK(l3[0].word == reversed(r3[0].word));

  FactorSet tm = FactorSet::build(thue_morse_generator(), 8);
  auto tmr = tm.special_words(1, Side::right);
  REQUIRE(tmr.size() == 2);
  CHECK(tmr[0].word == "a");
  CHECK(tmr[1].word == "b");
  CHECK_THROWS_AS(tm.special_words(8, Side::right), WindowError);

  SECTION("a Sturmian window has exactly one right-special word per length, strict") {
    for (const auto& f :
         {FactorSet::build(fibonacci_generator(), 10), FactorSet::build(tribonacci_generator(), 10)})
      for (size_t l = 0; l + 1 < f.depth(); ++l) {
        auto sp = f.special_words(l, Side::right);
        REQUIRE(sp.size() == 1);
        CHECK(sp[0].strict);
      }
  }
}

TEST_CASE("structure profile") {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 12);
  auto p = fib.structure_profile();
  CHECK(p.complexity[4] == 5);
  CHECK(p.reversal_closed);
  REQUIRE(p.balanced.has_value());
  CHECK(*p.balanced);
  CHECK(p.recurrent_within_window);
  for (size_t l = 1; l <= 12; ++l) CHECK(p.complexity[l] == l + 1);

  FactorSet trib = FactorSet::build(tribonacci_generator(), 10);
  auto pt = trib.structure_profile();
  for (size_t l = 1; l <= 10; ++l) CHECK(pt.complexity[l] == 2 * l + 1);

  FactorSet periodic = FactorSet::build(WordGenerator::eventually_periodic("", "ab"), 9);
  auto pp = periodic.structure_profile();
  for (size_t l = 1; l <= 9; ++l) CHECK(pp.complexity[l] == 2);

  FactorSet tm = FactorSet::build(thue_morse_generator(), 8);
  auto pm = tm.structure_profile();
  CHECK(pm.reversal_closed);
  CHECK_FALSE(*pm.balanced); // aa and bb are both factors
}

TEST_CASE("return words") {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 16);
  auto ra = fib.return_words("a");
  CHECK(ra.right == std::vector<Word>{"a", "ba"});
  auto rab = fib.return_words("ab");
  CHECK(rab.left == std::vector<Word>{"ab", "aba"});
  auto rbab = fib.return_words("bab");
  CHECK(rbab.right == std::vector<Word>{"aabab", "aabaabab"});

  SECTION("uR(u) = R'(u)u and Sturmian counts") {
    FactorSet trib = FactorSet::build(tribonacci_generator(), 40);
    for (const auto* f : {&fib, &trib}) {
      size_t k = f->alphabet().size();
      for (size_t l = 0; l <= 4; ++l)
        for (const Word& u : f->words_of_length(l)) {
          auto rw = f->return_words(u);
          CHECK(rw.right.size() == k);
          CHECK(rw.left.size() == k);
          std::vector<Word> ur, lu;
          for (const Word& r : rw.right) ur.push_back(u + r);
          for (const Word& s : rw.left) lu.push_back(s + u);
          CHECK(sorted(ur) == sorted(lu));
          CHECK(sorted(ur) == rw.complete);
        }
    }
  }

  SECTION("first left return words to the palindrome prefixes") {
    FactorSet trib = FactorSet::build(tribonacci_generator(), 30);
    Word delta = "abcabc";
    for (size_t n = 1; n <= 4; ++n) {
      Word un = iterated_palindromic_closure(delta.substr(0, n));
      auto rw = trib.return_words(un);
      std::vector<Word> expected;
      for (char c : trib.alphabet().symbols())
        expected.push_back(episturmian_image(delta.substr(0, n), Word(1, c)));
      CHECK(rw.left == sorted(expected));
    }
  }

  SECTION("errors") {
    CHECK_THROWS_AS(fib.return_words("bb"), Error); // not a factor
    // returns to a length-12 factor exceed the depth-16 window
    CHECK_THROWS_AS(fib.return_words("abaababaabaa"), WindowError);
  }
}
