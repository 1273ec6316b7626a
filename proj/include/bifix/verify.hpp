#ifndef BIFIX_VERIFY_HPP
#define BIFIX_VERIFY_HPP

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bifix/automaton.hpp"
#include "bifix/code.hpp"
#include "bifix/factor_set.hpp"
#include "bifix/free_group.hpp"
#include "bifix/generator.hpp"
#include "bifix/measure.hpp"
#include "bifix/periodicity.hpp"
#include "bifix/syntactic.hpp"
#include "bifix/transition_monoid.hpp"

namespace bifix {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool blocking = true;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "FAILED: " << what << "; ";
    }
  }
};

inline const std::vector<CodeSet>& fig5_codes() {
  static const std::vector<CodeSet> codes = {
      CodeSet{"aa", "ab", "ba"}, CodeSet{"a", "bab", "baab"}, CodeSet{"aa", "aba", "b"}};
  return codes;
}

struct GroundTruthRow {
  CodeSet code;
  CodeSet kernel;
  CodeSet derived;
};

inline const std::vector<GroundTruthRow>& degree3_ground_truth() {
  static const CodeSet dA{"aa", "ab", "ba"};
  static const CodeSet dB{"a", "baab", "bab"};
  static const CodeSet dC{"aa", "aba", "b"};
  static const std::vector<GroundTruthRow> rows = {
      {CodeSet{"aab", "aba", "baa", "bab"}, CodeSet{}, dA},
      {CodeSet{"aa", "aba", "baab", "bab"}, CodeSet{"aa"}, dA},
      {CodeSet{"aaba", "ab", "baa", "baba"}, CodeSet{"ab"}, dA},
      {CodeSet{"aab", "abaa", "abab", "ba"}, CodeSet{"ba"}, dA},
      {CodeSet{"aa", "ab", "baaba", "baba"}, CodeSet{"aa", "ab"}, dA},
      {CodeSet{"aa", "abaab", "abab", "ba"}, CodeSet{"aa", "ba"}, dA},
      {CodeSet{"aabaa", "aababaa", "ab", "ba"}, CodeSet{"ab", "ba"}, dA},
      {CodeSet{"a", "baabaab", "baabab", "babaab"}, CodeSet{"a"}, dB},
      {CodeSet{"a", "baab", "babaabaabab", "babaabab"}, CodeSet{"a", "baab"}, dB},
      {CodeSet{"a", "baabaab", "baababaab", "bab"}, CodeSet{"a", "bab"}, dB},
      {CodeSet{"aaba", "abaa", "ababa", "b"}, CodeSet{"b"}, dC},
      {CodeSet{"aa", "abaaba", "ababa", "b"}, CodeSet{"aa", "b"}, dC},
      {CodeSet{"aabaa", "aababaa", "aba", "b"}, CodeSet{"aba", "b"}, dC},
  };
  return rows;
}

struct Setup {
  FactorSet fib = FactorSet::build(fibonacci_generator(), 32);
  FactorSet fib12 = FactorSet::build(fibonacci_generator(), 12);
  FactorSet morse = FactorSet::build(thue_morse_generator(), 12);
  FactorSet trib = FactorSet::build(tribonacci_generator(), 24);
  std::vector<std::vector<CodeSet>> fib_by_degree;  // degrees 1..3
  std::vector<std::vector<CodeSet>> trib_by_degree; // degrees 1..2

  Setup() {
    for (size_t d = 1; d <= 3; ++d) fib_by_degree.push_back(enumerate_F_maximal_bifix(fib, d));
    for (size_t d = 1; d <= 2; ++d) trib_by_degree.push_back(enumerate_F_maximal_bifix(trib, d));
  }
};

inline const Setup& setup() {
  static Setup s;
  return s;
}

inline Quad fib_lambda() { return Quad(Rat(-1) / 2, Rat(1) / 2, 5); }

inline std::map<Word, Quad> fig1_values() {
  Quad l = fib_lambda();
  Quad one(Rat(1));
  auto lin = [&](long c0, long c1) { return Quad(Rat(c0)) + Quad(Rat(c1)) * l; };
  return {
      {"", one},          {"a", lin(0, 1)},    {"b", lin(1, -1)},   {"aa", lin(-1, 2)},
      {"ab", lin(1, -1)}, {"ba", lin(1, -1)},  {"aab", lin(-1, 2)}, {"aba", lin(1, -1)},
      {"baa", lin(-1, 2)},{"bab", lin(2, -3)}, {"aaba", lin(-1, 2)},{"abaa", lin(-1, 2)},
      {"abab", lin(2, -3)},{"baab", lin(-1, 2)},{"baba", lin(2, -3)},
  };
}

inline std::map<Word, Rat> fig2_values() {
  std::map<Word, Rat> v;
  v[""] = 1;
  v["a"] = v["b"] = Rat(1) / 2;
  v["aa"] = v["bb"] = Rat(1) / 6;
  v["ab"] = v["ba"] = Rat(1) / 3;
  for (const char* w : {"aab", "aba", "abb", "baa", "bab", "bba"}) v[w] = Rat(1) / 6;
  for (const char* w : {"aaba", "aabb", "abaa", "abab", "baba", "babb", "bbaa", "bbab"})
    v[w] = Rat(1) / 12;
  v["abba"] = v["baab"] = Rat(1) / 6;
  return v;
}

inline bool cyclic_equal(const Word& x, const Word& y) {
  if (x.size() != y.size()) return false;
  return (y + y).find(x) != Word::npos;
}

// --- criteria -------------------------------------------------------------

inline CriterionResult c1_enumeration() {
  Check c;
  const auto& s = setup();
  std::set<CodeSet> got2(s.fib_by_degree[1].begin(), s.fib_by_degree[1].end());
  std::set<CodeSet> want2(fig5_codes().begin(), fig5_codes().end());
  c.expect(got2 == want2, "degree-2 enumeration differs from the three known codes");
  std::set<CodeSet> got3(s.fib_by_degree[2].begin(), s.fib_by_degree[2].end());
  std::set<CodeSet> want3;
  for (const auto& row : degree3_ground_truth()) want3.insert(row.code);
  c.expect(got3 == want3, "degree-3 enumeration differs from the 13 known codes");
  return {1, "enumeration ground truth (degrees 2 and 3)", c.ok, true, c.log.str()};
}

inline CriterionResult c2_cardinality() {
  Check c;
  const auto& s = setup();
  for (size_t d = 1; d <= 3; ++d)
    for (const CodeSet& x : s.fib_by_degree[d - 1])
      c.expect(x.size() == d + 1, "Fibonacci degree " + std::to_string(d) + " code size");
  for (size_t d = 1; d <= 2; ++d)
    for (const CodeSet& x : s.trib_by_degree[d - 1])
      c.expect(x.size() == 2 * d + 1, "Tribonacci degree " + std::to_string(d) + " code size");
  return {2, "cardinality law (k-1)d+1", c.ok, true, c.log.str()};
}

inline CriterionResult c3_subgroups() {
  Check c;
  const auto& s = setup();
  auto run = [&](const FactorSet& f, const std::vector<CodeSet>& codes, size_t d) {
    for (const CodeSet& x : codes) {
      StallingsGraph g = stallings(x, f.alphabet());
      auto st = g.stats();
      c.expect(st.complete, "Stallings graph complete");
      c.expect(st.vertices == d, "Stallings graph has d vertices");
      c.expect(st.rank == x.size(), "rank equals Card(X)");
      Dfa coset = coset_automaton(x, f.alphabet());
      c.expect(canonical_form(coset) == g.canonical_form(), "coset automaton == Stallings graph");
    }
  };
  for (size_t d = 1; d <= 3; ++d) run(s.fib, s.fib_by_degree[d - 1], d);
  for (size_t d = 1; d <= 2; ++d) run(s.trib, s.trib_by_degree[d - 1], d);
  return {3, "subgroup theorem (complete fold, d vertices, basis, coset = Stallings)", c.ok, true,
          c.log.str()};
}

inline CriterionResult c4_hall() {
  Check c;
  const auto& s = setup();
  std::vector<long> expected = {1, 3, 13, 71, 461};
  for (size_t d = 1; d <= 5; ++d)
    c.expect(hall_count(d, 2) == expected[d - 1], "N_{d,2} value for d=" + std::to_string(d));
  for (size_t d = 1; d <= 3; ++d)
    c.expect(hall_count(d, 2) == s.fib_by_degree[d - 1].size(),
             "enumeration count vs Hall number at d=" + std::to_string(d));
  return {4, "Hall subgroup counting", c.ok, true, c.log.str()};
}

inline CriterionResult c5_measures() {
  Check c;
  const auto& s = setup();
  Distribution fib = invariant_distribution(s.fib12);
  c.expect(fib.exact(), "Fibonacci distribution is exact");
  for (const auto& [w, v] : fig1_values())
    c.expect(fib.at(w).exact() && fib.at(w).quad() == v, "Fibonacci pi(" + (w.empty() ? "1" : w) + ")");
  Distribution tm = invariant_distribution(s.morse);
  c.expect(tm.exact(), "Thue-Morse distribution is exact");
  for (const auto& [w, v] : fig2_values())
    c.expect(tm.at(w).exact() && tm.at(w).quad() == Quad(v), "Thue-Morse pi(" + (w.empty() ? "1" : w) + ")");
  for (size_t l = 1; l <= 4; ++l) {
    auto emp = empirical_frequencies(fibonacci_generator(), l, 100000);
    for (const auto& [w, freq] : emp)
      c.expect(std::fabs(freq - fib.at(w).value()) < 1e-3, "empirical frequency of " + w);
  }
  return {5, "invariant distributions exact + empirical agreement", c.ok, true, c.log.str()};
}

inline CriterionResult c6_average_length() {
  Check c;
  const auto& s = setup();
  Distribution fib = invariant_distribution(s.fib12);
  for (size_t d = 1; d <= 3; ++d)
    for (const CodeSet& x : s.fib_by_degree[d - 1]) {
      Scalar len = average_length(fib, x);
      c.expect(len.exact() && len.quad() == Quad(Rat(d)), "lambda(X) = d for a degree-" +
                                                              std::to_string(d) + " code");
    }
  Scalar worked = average_length(fib, CodeSet{"a", "bab", "baab"});
  c.expect(worked.exact() && worked.quad() == Quad(Rat(2)), "lambda({a,bab,baab}) = 2");
  return {6, "average length equals the degree (exact)", c.ok, true, c.log.str()};
}

inline CriterionResult c7_return_words() {
  Check c;
  FactorSet f = FactorSet::build(fibonacci_generator(), 16);
  std::map<Word, std::pair<std::vector<Word>, std::vector<Word>>> expected = {
      {"", {{"a", "b"}, {"a", "b"}}},
      {"a", {{"a", "ba"}, {"a", "ab"}}},
      {"b", {{"ab", "aab"}, {"ba", "baa"}}},
      {"aa", {{"baa", "babaa"}, {"aab", "aabab"}}},
      {"ab", {{"ab", "aab"}, {"ab", "aba"}}},
      {"ba", {{"ba", "aba"}, {"ba", "baa"}}},
      {"aab", {{"aab", "abaab"}, {"aab", "aabab"}}},
      {"aba", {{"ba", "aba"}, {"ab", "aba"}}},
      {"baa", {{"baa", "babaa"}, {"baa", "baaba"}}},
      {"bab", {{"aabab", "aabaabab"}, {"babaa", "babaabaa"}}},
  };
  for (auto& [u, rl] : expected) {
    ReturnWords rw = f.return_words(u);
    auto want_r = rl.first, want_l = rl.second;
    std::sort(want_r.begin(), want_r.end(), shortlex_less);
    std::sort(want_l.begin(), want_l.end(), shortlex_less);
    c.expect(rw.right == want_r, "R_F(" + (u.empty() ? "1" : u) + ")");
    c.expect(rw.left == want_l, "R'_F(" + (u.empty() ? "1" : u) + ")");
    c.expect(rw.right.size() == 2, "two right return words");
    StallingsGraph g = stallings(CodeSet(rw.right), f.alphabet());
    auto st = g.stats();
    c.expect(st.vertices == 1 && st.complete, "R_F(u) folds to the one-vertex complete graph");
  }
  return {7, "return word tables and free-group bases", c.ok, true, c.log.str()};
}

inline CriterionResult c8_parse_calculus() {
  Check c;
  const auto& s = setup();
  std::vector<CodeSet> all;
  for (const auto& v : s.fib_by_degree) all.insert(all.end(), v.begin(), v.end());
  for (const CodeSet& x : all) {
    ParseProfile p(x, s.fib12);
    for (size_t l = 0; l <= 10; ++l)
      for (const Word& w : s.fib12.words_of_length(l)) {
        c.expect(p.at(w) == parse_count(w, x), "profile vs brute parses at " + w);
        // coefficientwise identity of (1-A) L_X (1-A)
        long coeff = long(p.at(w));
        if (!w.empty()) {
          coeff -= long(p.at(w.substr(1)));
          coeff -= long(p.at(w.substr(0, w.size() - 1)));
          if (w.size() >= 2) coeff += long(p.at(w.substr(1, w.size() - 2)));
        }
        long want = (w.empty() ? 1 : 0) - (x.contains(w) ? 1 : 0);
        c.expect(coeff == want, "series identity at " + (w.empty() ? Word("1") : w));
      }
  }
  return {8, "parse calculus (profile = brute force, series identity)", c.ok, true, c.log.str()};
}

inline CriterionResult c9_derivation() {
  Check c;
  const auto& s = setup();
  for (const auto& row : degree3_ground_truth()) {
    c.expect(derived_code(row.code, s.fib) == row.derived, "derived code of a ground-truth row");
    BifixAnalysis a = analyze(row.code, s.fib);
    c.expect(a.kernel == row.kernel, "kernel of a ground-truth row");
  }
  for (size_t d = 1; d <= 3; ++d)
    for (const CodeSet& x : s.fib_by_degree[d - 1]) {
      BifixAnalysis a = analyze(x, s.fib);
      if (d >= 2) c.expect(code_from_kernel(a.kernel, s.fib, d) == x, "kernel round-trip");
    }
  return {9, "derivation and kernel reconstruction", c.ok, true, c.log.str()};
}

inline CriterionResult c10_internal_transformation() {
  Check c;
  const auto& s = setup();
  CodeSet x1{"aa", "ab", "ba"};
  CodeSet y1 = internal_transformation(x1, s.fib, "b");
  c.expect(y1 == CodeSet{"aa", "aba", "b"}, "transformation of A^2 cap F by b");
  c.expect(f_degree(y1, s.fib) == f_degree(x1, s.fib), "degree preserved (1)");
  c.expect(y1.size() == x1.size(), "cardinality preserved (1)");

  CodeSet x2{"aaba", "abaa", "abab", "baab", "baba"};
  CodeSet y2 = internal_transformation(x2, s.fib, "aba");
  c.expect(y2 == CodeSet{"aabaa", "aabab", "aba", "baab", "babaa"},
           "transformation of A^4 cap F by aba");
  c.expect(f_degree(y2, s.fib) == f_degree(x2, s.fib), "degree preserved (2)");
  c.expect(y2.size() == x2.size(), "cardinality preserved (2)");
  return {10, "internal transformations preserve degree and cardinality", c.ok, true, c.log.str()};
}

inline CriterionResult c11_syntactic() {
  Check c;
  const auto& s = setup();
  CodeSet x{"aa", "abaaba", "abab", "baab", "baba"};
  PermGroup g = f_group(x, s.fib);
  c.expect(g.degree() == 4, "F-group acts on 4 points");
  c.expect(g.order() == 4, "F-group has order 4");
  c.expect(g.exponent() == 2, "F-group has exponent 2");
  c.expect(g.transitive(), "F-group transitive");

  Dfa a = minimize(literal_automaton(x, s.fib.alphabet()));
  c.expect(a.size() == 9, "minimal automaton has 9 states");
  TransitionMonoid m = TransitionMonoid::build(a);
  GreenReport rep = green_analysis(m, &s.fib, 4);
  c.expect(rep.designated.has_value(), "designated D-class found");
  if (rep.designated) {
    const Eggbox& box = *rep.designated;
    c.expect(box.r_classes == 3 && box.l_classes == 3, "3x3 eggbox");
    c.expect(box.group_h_classes == 5, "five group H-classes");
    c.expect(box.h_class_size == 4, "H-classes of size 4");
  }
  // H-class of phi(ba): the maximal group containing it, as permutations
  // of Im(ba) on the BFS state ids of the minimal automaton.
  size_t iba = m.index_of_word("ba");
  std::vector<int> image = m.element(iba).image();
  std::vector<int> labels;
  for (int q : image) labels.push_back(q + 1);
  std::set<std::string> got;
  std::set<size_t> h_class;
  for (size_t i = 0; i < m.size(); ++i) {
    if (rep.r_class[i] != rep.r_class[iba] || rep.l_class[i] != rep.l_class[iba]) continue;
    h_class.insert(i);
    Perm p(image.size());
    for (size_t j = 0; j < image.size(); ++j) {
      int t = m.element(i).map_[image[j]];
      auto pos = std::find(image.begin(), image.end(), t);
      c.expect(pos != image.end(), "H-class member permutes Im(ba)");
      p[j] = int(pos - image.begin());
    }
    got.insert(cycles_string(p, labels));
  }
  std::set<std::string> want = {"(1 5)(2 6)", "(1 2)(5 6)", "()", "(1 6)(2 5)"};
  c.expect(got == want, "H-class of phi(ba) permutations");
  c.expect(h_class.size() == 4, "H-class of phi(ba) has four elements");
  for (const char* w : {"ba", "baaba", "baba", "babaaba"})
    c.expect(h_class.count(m.index_of_word(w)) == 1, std::string("H-class contains phi(") + w + ")");
  return {11, "syntactic F-group and eggbox of the degree-4 code", c.ok, true, c.log.str()};
}

inline CriterionResult c12_realization() {
  Check c;
  const auto& s = setup();
  PermGroup klein({1, 2, 3, 4}, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"a", "b"});
  RealizationResult r = realize_syntactic_group(klein, s.fib);
  c.expect(r.code.size() == 5, "realized code has 5 words");
  c.expect(r.degree == 4, "realized code has F-degree 4");
  c.expect(r.equivalent, "F-group equivalent to the Klein four group");
  return {12, "realization of the Klein four group", c.ok, true, c.log.str()};
}

inline CriterionResult c13_periodicity() {
  Check c;
  Alphabet ab("ab");
  for (size_t n = 1; n <= 12; ++n)
    for (size_t bits = 0; bits < (size_t(1) << n); ++bits) {
      Word w;
      for (size_t i = 0; i < n; ++i) w += (bits >> i) & 1 ? 'b' : 'a';
      if (cft_least_period(w) != least_period(w)) {
        c.expect(false, "critical factorization mismatch at " + w);
        break;
      }
    }
  auto x3 = forced_periodicity(ab, {"aaa", "aabb", "baa", "babb", "bba", "bbb"});
  c.expect(x3.nonempty, "X3 scenario admits infinite words");
  c.expect(x3.all_ultimately_periodic, "X3 scenario forces ultimate periodicity");
  c.expect(x3.cycles.size() == 1 && cyclic_equal(x3.cycles[0], "ba"), "X3 tail cycle is (ba)");
  auto golden = forced_periodicity(ab, {"bb"});
  c.expect(golden.nonempty && !golden.all_ultimately_periodic,
           "forbidding bb leaves aperiodic words");
  return {13, "periodicity (critical factorization exhaustive, forced periodicity)", c.ok, true,
          c.log.str()};
}

inline CriterionResult c14_intersections() {
  Check c;
  const auto& s = setup();
  PermGroup z2({1, 2}, {{0, 1}, {1, 0}}, {"a", "b"});
  Dfa aut = group_automaton(z2, Alphabet("ab"));

  IntersectionReport fib = intersect_with_F(aut, s.fib);
  c.expect(fib.code == CodeSet{"a", "bab", "baab"}, "(a u ba*b) cap Fibonacci");
  c.expect(fib.degree == 2, "degree of (a u ba*b) cap Fibonacci");

  IntersectionReport tm = intersect_with_F(aut, s.morse);
  c.expect(tm.code == CodeSet{"a", "bb", "bab", "baab"}, "(a u ba*b) cap Thue-Morse");
  c.expect(tm.degree == 2, "degree of (a u ba*b) cap Thue-Morse");

  CodeSet z3{"aaa", "aaba", "aabb", "ab", "baa", "baba", "babb", "bba", "bbb"};
  IntersectionReport zf = intersect_with_F(z3, s.fib);
  c.expect(zf.code == CodeSet{"ab", "baa", "aaba", "baba"},
           "nine-word degree-3 code cap Fibonacci");
  // The intersection here is itself an enumerated F-maximal bifix code of
  // F-degree 3 (kernel {ab}), so the full degree survives.
  c.expect(zf.degree == 3, "degree of the nine-word code intersection");

  // Strict degree drop: the degree-3 maximal code with kernel {aa,ab,ba}
  // meets F in exactly that kernel, which has F-degree 2.
  CodeSet k{"aa", "ab", "ba"};
  c.expect(is_F_maximal(k, s.fib, CodeKind::bifix).maximal, "{aa,ab,ba} is F-maximal");
  c.expect(f_degree(k, s.fib) == 2, "d_F = 2 < d = 3 for the kernel intersection");
  return {14, "group code intersections with F", c.ok, true, c.log.str()};
}

inline CriterionResult c15_nonstrict_stretch() {
  Check c;
  FactorSet f = FactorSet::build(WordGenerator::pal(DirectiveWord("c", "ab")), 20);
  // (Z/2Z)^3 as a permutation group on its own elements, one xor generator
  // per letter.
  std::vector<int> labels;
  for (int i = 0; i < 8; ++i) labels.push_back(i + 1);
  auto xor_perm = [](int mask) {
    Perm p(8);
    for (int i = 0; i < 8; ++i) p[i] = i ^ mask;
    return p;
  };
  PermGroup g(labels, {xor_perm(1), xor_perm(2), xor_perm(4)}, {"a", "b", "c"});
  Dfa aut = group_automaton(g, Alphabet("abc"));
  IntersectionReport ir = intersect_with_F(aut, f);
  c.expect(ir.code.size() == 10, "Z cap F has 10 elements");
  c.expect(ir.degree == 8, "d_F(Z cap F) = 8");
  c.expect(ir.code.size() != 2 * ir.degree + 1, "cardinality law fails off the Sturmian case");
  return {15, "stretch: non-strict episturmian counterexample", c.ok, false, c.log.str()};
}

} // namespace acceptance

inline std::vector<CriterionResult> run_acceptance() {
  using namespace acceptance;
  std::vector<std::function<CriterionResult()>> criteria = {
      c1_enumeration,  c2_cardinality, c3_subgroups,   c4_hall,
      c5_measures,     c6_average_length, c7_return_words, c8_parse_calculus,
      c9_derivation,   c10_internal_transformation, c11_syntactic, c12_realization,
      c13_periodicity, c14_intersections, c15_nonstrict_stretch,
  };
  std::vector<CriterionResult> out;
  for (auto& fn : criteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const Error& e) {
      r.id = int(out.size()) + 1;
      r.name = "criterion " + std::to_string(out.size() + 1);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  // runtime bounds pinned by the criteria themselves
  if (out[0].seconds >= 10.0) {
    out[0].pass = false;
    out[0].detail += "enumeration exceeded 10 s; ";
  }
  if (out[3].seconds >= 1.0) {
    out[3].pass = false;
    out[3].detail += "Hall counting exceeded 1 s; ";
  }
  if (out[12].seconds >= 30.0) {
    out[12].pass = false;
    out[12].detail += "periodicity exceeded 30 s; ";
  }
  return out;
}

} // namespace bifix

#endif
