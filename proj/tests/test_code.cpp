#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bifix/code.hpp"
#include "bifix/generator.hpp"
#include "oracles.hpp"

using namespace bifix;

namespace {

const FactorSet& fib() {
  static FactorSet f = FactorSet::build(fibonacci_generator(), 32);
  return f;
}

std::vector<CodeSet> all_fib_codes() {
  std::vector<CodeSet> out;
  for (size_t d = 1; d <= 3; ++d)
    for (const CodeSet& x : enumerate_F_maximal_bifix(fib(), d)) out.push_back(x);
  return out;
}

} // namespace

TEST_CASE("classification") {
  auto f1 = classify_code(CodeSet{"ab", "ba"});
  CHECK((f1.prefix && f1.suffix && f1.bifix));
  auto f2 = classify_code(CodeSet{"a", "bab", "baab"});
  CHECK(f2.bifix);
  auto f3 = classify_code(CodeSet{"aa", "ab", "b"});
  CHECK(f3.prefix);
  CHECK_FALSE(f3.suffix);
  CHECK(classify_code(CodeSet{}).bifix);
  CHECK_THROWS_AS(CodeSet{""}, PreconditionError);
}

TEST_CASE("F-maximality") {
  CHECK(is_F_maximal(CodeSet{"a", "ba"}, fib(), CodeKind::prefix).maximal);
  CHECK(is_F_maximal(CodeSet{"a", "bab", "baab"}, fib(), CodeKind::bifix).maximal);
  auto r = is_F_maximal(CodeSet{"a", "bab"}, fib(), CodeKind::bifix);
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness.has_value());
  CodeSet xr{"a", "bab"};
  bool prefix_incomparable = std::none_of(xr.begin(), xr.end(), [&](const Word& x) {
    return prefix_comparable(*r.witness, x);
  });
  bool suffix_incomparable = std::none_of(xr.begin(), xr.end(), [&](const Word& x) {
    return suffix_comparable(*r.witness, x);
  });
  CHECK((prefix_incomparable || suffix_incomparable));
  CHECK_THROWS_AS(is_F_maximal(CodeSet{"bb"}, fib(), CodeKind::prefix), PreconditionError);
}

TEST_CASE("parses") {
  auto p = parses("bab", CodeSet{"a", "bab", "baab"});
  REQUIRE(p.size() == 2);
  CHECK((p[0].before == "" && p[0].middle == std::vector<Word>{"bab"} && p[0].after == ""));
  CHECK((p[1].before == "b" && p[1].middle == std::vector<Word>{"a"} && p[1].after == "b"));
  CHECK(parse_count("aaba", CodeSet{"aaba", "ab", "baa", "baba"}) == 3);
  CHECK(parse_count("", CodeSet{"ab"}) == 1);
}

TEST_CASE("parse profiles") {
  SECTION("empty code counts prefixes") {
    ParseProfile p(CodeSet{}, fib());
    for (size_t l = 0; l <= 6; ++l)
      for (const Word& w : fib().words_of_length(l)) CHECK(p.at(w) == w.size() + 1);
  }
  SECTION("profile values") {
    ParseProfile p(CodeSet{"a", "bab", "baab"}, fib());
    CHECK(p.at("bab") == 2);
  }
  SECTION("capped profile reconstructs the code from its kernel") {
    CHECK(code_from_kernel(CodeSet{"a"}, fib(), 2) == CodeSet{"a", "bab", "baab"});
  }
  SECTION("parse enumerator axioms") {
    for (const CodeSet& x : all_fib_codes()) {
      ParseProfile p(x, fib());
      CHECK(p.at("") == 1);
      for (size_t l = 0; l + 1 <= 10; ++l)
        for (const Word& w : fib().words_of_length(l))
          for (char c : fib().alphabet().symbols()) {
            if (fib().contains(w + c)) {
              size_t diff = p.at(w + c) - p.at(w);
              CHECK(diff <= 1);
            }
            if (fib().contains(c + w)) {
              size_t diff = p.at(c + w) - p.at(w);
              CHECK(diff <= 1);
            }
            for (char b : fib().alphabet().symbols()) {
              Word awb = c + w + b;
              if (awb.size() <= 10 && fib().contains(awb))
                CHECK(p.at(c + w) + p.at(w + b) >= p.at(w) + p.at(awb));
            }
          }
    }
  }
  SECTION("profile equals brute-force parse counting") {
    for (const CodeSet& x : all_fib_codes()) {
      ParseProfile p(x, fib());
      for (size_t l = 0; l <= 10; ++l)
        for (const Word& w : fib().words_of_length(l)) CHECK(p.at(w) == parse_count(w, x));
    }
  }
  SECTION("monotone along factors, strictly through code words") {
    for (const CodeSet& x : all_fib_codes()) {
      ParseProfile p(x, fib());
      for (size_t l = 0; l <= 8; ++l)
        for (const Word& w : fib().words_of_length(l))
          for (size_t i = 0; i <= w.size(); ++i)
            for (size_t j = i; j <= w.size(); ++j) {
              Word v = w.substr(i, j - i);
              CHECK(p.at(v) <= p.at(w));
              if (x.contains(w) && i > 0 && j < w.size()) CHECK(p.at(v) < p.at(w));
            }
    }
  }
}

TEST_CASE("analysis") {
  auto a1 = analyze(CodeSet{"a", "bab", "baab"}, fib());
  CHECK(a1.degree == 2);
  CHECK(a1.kernel == CodeSet{"a"});
  auto a2 = analyze(CodeSet{"aaba", "ab", "baa", "baba"}, fib());
  CHECK(a2.degree == 3);
  auto a3 = analyze(CodeSet{"aa", "ab", "ba"}, fib());
  CHECK(a3.degree == 2);
  CHECK(a3.kernel.empty());
  CHECK_THROWS_AS(analyze(CodeSet{"a", "bab"}, fib()), PreconditionError);
}

TEST_CASE("derived codes") {
  CHECK(derived_code(CodeSet{"a", "bab", "baab"}, fib()) == CodeSet{"a", "b"});
  CHECK(derived_code(CodeSet{"aab", "aba", "baa", "bab"}, fib()) == CodeSet{"aa", "ab", "ba"});
  CHECK(derived_code(CodeSet{"aaba", "abaa", "ababa", "b"}, fib()) == CodeSet{"aa", "aba", "b"});
  CHECK_THROWS_AS(derived_code(CodeSet{"a", "b"}, fib()), PreconditionError);

  SECTION("derivation drops the degree by one and swaps boundary data") {
    for (const CodeSet& x : all_fib_codes()) {
      auto a = analyze(x, fib());
      if (a.degree < 2) continue;
      CodeSet d = derived_code(x, fib());
      auto ad = analyze(d, fib());
      CHECK(ad.degree == a.degree - 1);
      // proper suffixes of X' = S cap I(X)
      std::set<Word> si;
      std::set<Word> internals(a.internal.begin(), a.internal.end());
      for (const Word& s : a.proper_suffixes)
        if (internals.count(s)) si.insert(s);
      std::set<Word> sd(ad.proper_suffixes.begin(), ad.proper_suffixes.end());
      CHECK(sd == si);
    }
  }
}

TEST_CASE("kernel reconstruction") {
  CHECK(code_from_kernel(CodeSet{}, fib(), 2) == CodeSet{"aa", "ab", "ba"});
  CHECK(code_from_kernel(CodeSet{"a"}, fib(), 2) == CodeSet{"a", "bab", "baab"});
  CHECK(code_from_kernel(CodeSet{"a", "baab"}, fib(), 3) ==
        CodeSet{"a", "baab", "babaabaabab", "babaabab"});
  CHECK_THROWS_AS(code_from_kernel(CodeSet{"bab"}, fib(), 3), PreconditionError);
  CHECK_THROWS_AS(code_from_kernel(CodeSet{"aa", "ab", "ba"}, fib(), 3), PreconditionError);

  SECTION("round-trips over the enumerated codes") {
    for (const CodeSet& x : all_fib_codes()) {
      auto a = analyze(x, fib());
      if (a.degree >= 2) CHECK(code_from_kernel(a.kernel, fib(), a.degree) == x);
    }
  }
  SECTION("window exhaustion is reported") {
    FactorSet small = FactorSet::build(fibonacci_generator(), 4);
    CHECK_THROWS_AS(code_from_kernel(CodeSet{"a", "baab"}, small, 3), WindowError);
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_F_maximal_bifix(fib(), 1) == std::vector<CodeSet>{CodeSet{"a", "b"}});
  CHECK(enumerate_F_maximal_bifix(fib(), 2).size() == 3);
  CHECK(enumerate_F_maximal_bifix(fib(), 3).size() == 13);
}

TEST_CASE("internal transformations") {
  CHECK(internal_transformation(CodeSet{"aa", "ab", "ba"}, fib(), "b") == CodeSet{"aa", "aba", "b"});
  CHECK(internal_transformation(CodeSet{"aaba", "abaa", "abab", "baab", "baba"}, fib(), "aba") ==
        CodeSet{"aabaa", "aabab", "aba", "baab", "babaa"});

  SECTION("no transformation applies to {aa, aba, b}") {
    CodeSet x{"aa", "aba", "b"};
    for (size_t l = 1; l <= 4; ++l)
      for (const Word& w : fib().words_of_length(l))
        CHECK_THROWS_AS(internal_transformation(x, fib(), w), PreconditionError);
  }
  SECTION("GwD cardinality identity") {
    // X = A^4 cap F, w = aba: G = D = {a, b}
    CodeSet x{"aaba", "abaa", "abab", "baab", "baba"};
    Word w = "aba";
    std::vector<Word> g, d;
    for (const Word& v : x) {
      if (v.size() > w.size() && is_suffix(w, v)) g.push_back(v.substr(0, v.size() - w.size()));
      if (v.size() > w.size() && is_prefix(w, v)) d.push_back(v.substr(w.size()));
    }
    size_t gwd = 0;
    for (const Word& u : g)
      for (const Word& v : d)
        if (fib().contains(u + w + v)) ++gwd;
    CHECK(gwd == g.size() + d.size() - 1);
  }
}

TEST_CASE("prefix shortening") {
  CHECK(prefix_shorten(CodeSet{"aa", "ab", "ba"}, fib(), "a") == CodeSet{"a", "ba"});
  CHECK(prefix_shorten(CodeSet{"a", "ba"}, fib(), "b") == CodeSet{"a", "b"});
  CodeSet x{"aa", "ab", "ba"};
  CHECK(prefix_shorten(x, fib(), "ab") == x);
  CHECK_THROWS_AS(prefix_shorten(x, fib(), "bb"), PreconditionError);
}

TEST_CASE("intersections with F") {
  CodeSet z3{"aaa", "aaba", "aabb", "ab", "baa", "baba", "babb", "bba", "bbb"};
  auto r = intersect_with_F(z3, fib());
  CHECK(r.code == CodeSet{"aaba", "ab", "baa", "baba"});
  CHECK(r.degree == 3);
}

TEST_CASE("completion") {
  auto r1 = complete_bifix(CodeSet{"a", "bab"}, fib());
  CHECK(r1.code == CodeSet{"a", "bab", "baab"});
  CHECK(r1.degree == 2);
  auto r2 = complete_bifix(CodeSet{"a", "bab"}, fib(), 3);
  CHECK(r2.code == CodeSet{"a", "baabaab", "baababaab", "bab"});
  auto r3 = complete_bifix(CodeSet{"a", "b"}, fib());
  CHECK(r3.already_maximal);
  CHECK(r3.code == CodeSet{"a", "b"});
}

TEST_CASE("suffix decomposition into maximal prefix codes") {
  for (const CodeSet& x : all_fib_codes()) {
    auto a = analyze(x, fib());
    std::set<Word> remaining(a.proper_suffixes.begin(), a.proper_suffixes.end());
    remaining.erase(Word());
    CodeSet cur = x;
    size_t layers = 0;
    while (true) {
      auto ac = analyze(cur, fib());
      if (ac.degree < 2) break;
      std::set<Word> internals(ac.internal.begin(), ac.internal.end());
      std::vector<Word> layer;
      for (const Word& s : remaining)
        if (!internals.count(s)) layer.push_back(s);
      CodeSet y(layer);
      CHECK(is_F_maximal(y, fib(), CodeKind::prefix).maximal);
      for (const Word& s : layer) remaining.erase(s);
      cur = derived_code(cur, fib());
      ++layers;
    }
    CHECK(remaining.empty());
    CHECK(layers == a.degree - 1);
  }
}

TEST_CASE("length identity") {
  // sum of |x| over X = Card(P) + Card(S) + (k - 2) d
  for (const CodeSet& x : all_fib_codes()) {
    auto a = analyze(x, fib());
    size_t total = 0;
    for (const Word& w : x) total += w.size();
    CHECK(total == a.proper_prefixes.size() + a.proper_suffixes.size());
  }
  FactorSet trib = FactorSet::build(tribonacci_generator(), 24);
  for (size_t d = 1; d <= 2; ++d)
    for (const CodeSet& x : enumerate_F_maximal_bifix(trib, d)) {
      auto a = analyze(x, trib);
      size_t total = 0;
      for (const Word& w : x) total += w.size();
      CHECK(total == a.proper_prefixes.size() + a.proper_suffixes.size() + a.degree);
    }
}

TEST_CASE("restriction to a right essential subset") {
  // maximal prefix codes of A* restricted to the Fibonacci window
  for (const CodeSet& x : {CodeSet{"aa", "ab", "ba", "bb"}, CodeSet{"a", "ba", "bb"},
                           CodeSet{"aaa", "aab", "aba", "abb", "baa", "bab", "bba", "bbb"}}) {
    std::vector<Word> in;
    for (const Word& w : x)
      if (fib().contains(w)) in.push_back(w);
    CHECK(is_F_maximal(CodeSet(in), fib(), CodeKind::prefix).maximal);
  }
}

TEST_CASE("cardinality law on the window") {
  for (const CodeSet& x : all_fib_codes()) {
    auto a = analyze(x, fib());
    CHECK(x.size() == a.degree + 1);
  }
}
