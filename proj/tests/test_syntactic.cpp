#include <catch2/catch_amalgamated.hpp>

#include "bifix/generator.hpp"
#include "bifix/syntactic.hpp"

using namespace bifix;

namespace {
const FactorSet& fib() {
  static FactorSet f = FactorSet::build(fibonacci_generator(), 32);
  return f;
}
const CodeSet& degree4_code() {
  static CodeSet x{"aa", "abaaba", "abab", "baab", "baba"};
  return x;
}
} // namespace

TEST_CASE("transition monoids") {
  SECTION("two-state group automaton") {
    Dfa a(Alphabet("ab"), 2);
    a.set_terminal(0);
    a.set_transition(0, 'a', 0);
    a.set_transition(1, 'a', 1);
    a.set_transition(0, 'b', 1);
    a.set_transition(1, 'b', 0);
    TransitionMonoid m = TransitionMonoid::build(a);
    CHECK(m.size() == 2);
  }
  SECTION("single state") {
    Dfa a(Alphabet("a"), 1);
    a.set_terminal(0);
    a.set_transition(0, 'a', 0);
    CHECK(TransitionMonoid::build(a).size() == 1);
  }
  SECTION("cap") {
    Dfa a = minimize(literal_automaton(degree4_code(), Alphabet("ab")));
    CHECK_THROWS_AS(TransitionMonoid::build(a, 5), Error);
  }
}

TEST_CASE("Green analysis of the degree-4 example") {
  Dfa a = minimize(literal_automaton(degree4_code(), Alphabet("ab")));
  REQUIRE(a.size() == 9);
  TransitionMonoid m = TransitionMonoid::build(a);
  GreenReport rep = green_analysis(m, &fib(), 4);
  REQUIRE(rep.designated.has_value());
  const Eggbox& box = *rep.designated;
  CHECK(box.r_classes == 3);
  CHECK(box.l_classes == 3);
  CHECK(box.group_h_classes == 5);
  CHECK(box.h_class_size == 4);
  CHECK(box.structure_group.order() == 4);
  CHECK(box.structure_group.exponent() == 2);

  SECTION("rank-4 elements of phi(F) in one regular D-class") {
    // green_analysis throws if they spread over several D-classes
    CHECK_NOTHROW(green_analysis(m, &fib(), 4));
  }
  SECTION("idempotent H-classes are exactly the same-kernel-same-image cells") {
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m.element(i).idempotent()) continue;
      for (size_t j = 0; j < m.size(); ++j) {
        bool same_h = rep.r_class[i] == rep.r_class[j] && rep.l_class[i] == rep.l_class[j];
        bool same_data = m.element(i).image() == m.element(j).image() &&
                         m.element(i).nuclear_classes() == m.element(j).nuclear_classes();
        CHECK(same_h == same_data);
      }
    }
  }
  SECTION("words of F with d parses have rank d") {
    ParseProfile p(degree4_code(), fib());
    for (size_t l = 0; l <= 10; ++l)
      for (const Word& w : fib().words_of_length(l))
        if (p.at(w) == 4) CHECK(m.element(m.index_of_word(w)).rank() == 4);
  }
}

TEST_CASE("F-groups") {
  SECTION("the degree-4 code has the Klein four group") {
    PermGroup g = f_group(degree4_code(), fib());
    CHECK(g.degree() == 4);
    CHECK(g.order() == 4);
    CHECK(g.exponent() == 2);
    CHECK(g.transitive());
  }
  SECTION("(a u ba*b) cap F has a group of order two") {
    PermGroup g = f_group(CodeSet{"a", "bab", "baab"}, fib());
    CHECK(g.degree() == 2);
    CHECK(g.order() == 2);
  }
  SECTION("degree-1 codes have the trivial group") {
    PermGroup g = f_group(CodeSet{"a", "b"}, fib());
    CHECK(g.degree() == 1);
    CHECK(g.order() == 1);
  }
  SECTION("the choice of simple automaton does not matter") {
    for (const CodeSet& x :
         {degree4_code(), CodeSet{"a", "bab", "baab"}, CodeSet{"aab", "aba", "baa", "bab"}}) {
      PermGroup via_minimal = f_group(x, fib());
      PermGroup via_literal = f_group(x, fib(), literal_automaton(x, Alphabet("ab")));
      CHECK(perm_groups_equivalent(via_minimal, via_literal));
    }
  }
  SECTION("f_group equals the structure group of the designated D-class") {
    for (size_t d = 2; d <= 3; ++d)
      for (const CodeSet& x : enumerate_F_maximal_bifix(fib(), d)) {
        PermGroup by_returns = f_group(x, fib());
        Dfa a = minimize(literal_automaton(x, Alphabet("ab")));
        TransitionMonoid m = TransitionMonoid::build(a);
        GreenReport rep = green_analysis(m, &fib(), d);
        REQUIRE(rep.designated.has_value());
        CHECK(perm_groups_equivalent(by_returns, rep.designated->structure_group));
      }
  }
}

TEST_CASE("group codes") {
  SECTION("Z/2 gives a u ba*b") {
    PermGroup z2({1, 2}, {{0, 1}, {1, 0}}, {"a", "b"});
    auto [dfa, z] = group_code(z2, Alphabet("ab"), 6);
    CHECK(automaton_properties(dfa).group);
    CHECK(z == CodeSet{"a", "bb", "bab", "baab", "baaab", "baaaab"});
    CHECK(f_degree(intersect_with_F(dfa, fib()).code, fib()) == 2);
  }
  SECTION("cyclic shifts give the uniform code") {
    PermGroup z3({1, 2, 3}, {{1, 2, 0}, {1, 2, 0}}, {"a", "b"});
    auto [dfa, z] = group_code(z3, Alphabet("ab"), 3);
    std::vector<Word> all;
    for (char c1 : {'a', 'b'})
      for (char c2 : {'a', 'b'})
        for (char c3 : {'a', 'b'}) all.push_back({c1, c2, c3});
    CHECK(z == CodeSet(all));
    CHECK(f_degree(intersect_with_F(dfa, fib()).code, fib()) == 3);
  }
  SECTION("the Klein automaton cuts out the degree-4 code") {
    PermGroup klein({1, 2, 3, 4}, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"a", "b"});
    Dfa dfa = group_automaton(klein, Alphabet("ab"));
    CHECK(intersect_with_F(dfa, fib()).code == degree4_code());
  }
  SECTION("rejects intransitive groups and generator mismatches") {
    PermGroup bad({1, 2}, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(group_automaton(bad, Alphabet("ab")), PreconditionError);
    PermGroup z2({1, 2}, {{1, 0}});
    CHECK_THROWS_AS(group_automaton(z2, Alphabet("ab")), PreconditionError);
  }
}

TEST_CASE("realization of syntactic groups") {
  SECTION("Klein four") {
    PermGroup klein({1, 2, 3, 4}, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"a", "b"});
    RealizationResult r = realize_syntactic_group(klein, fib());
    CHECK(r.code.size() == 5);
    CHECK(r.degree == 4);
    CHECK(r.equivalent);
  }
  SECTION("trivial group") {
    PermGroup triv({1}, {{0}, {0}}, {"a", "b"});
    RealizationResult r = realize_syntactic_group(triv, fib());
    CHECK(r.code == CodeSet{"a", "b"});
    CHECK(r.fgroup.order() == 1);
    CHECK(r.equivalent);
  }
  SECTION("S3 on three points") {
    PermGroup s3({1, 2, 3}, {{1, 2, 0}, {1, 0, 2}}, {"a", "b"});
    RealizationResult r = realize_syntactic_group(s3, fib());
    CHECK(r.code.size() == 4);
    CHECK(r.degree == 3);
    CHECK(r.fgroup.order() == 6);
    CHECK(r.equivalent);
  }
}

TEST_CASE("permutation group equivalence") {
  PermGroup klein({1, 2, 3, 4}, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  PermGroup z4({1, 2, 3, 4}, {{1, 2, 3, 0}});
  CHECK(perm_groups_equivalent(klein, klein));
  CHECK_FALSE(perm_groups_equivalent(klein, z4));
  PermGroup relabeled({7, 8, 9, 10}, {{2, 3, 0, 1}, {1, 0, 3, 2}});
  CHECK(perm_groups_equivalent(klein, relabeled));
  PermGroup realized = f_group(degree4_code(), fib());
  CHECK(perm_groups_equivalent(realized, klein));
}
