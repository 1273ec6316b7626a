#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bifix/io.hpp"

using namespace bifix;

TEST_CASE("generator JSON round-trips") {
  for (const std::string spec :
       {"fixpoint:a->ab,b->a@a", "fixpoint:a->ab,b->ac,c->a@a", "pal:(abc)^w", "pal:c,(ab)^w",
        "evper:ba,ab"}) {
    WordGenerator g = WordGenerator::parse(spec);
    WordGenerator h = generator_from_json(to_json(g));
    CHECK(g.prefix(128) == h.prefix(128));
    CHECK(to_json(g) == to_json(h));
  }
}

TEST_CASE("code files") {
  std::istringstream in("a   bab # comment\nbaab\n# whole line comment\n");
  CodeSet x = read_code_file(in);
  CHECK(x == CodeSet{"a", "bab", "baab"});
  std::ostringstream out;
  write_code_file(out, x);
  std::istringstream back(out.str());
  CHECK(read_code_file(back) == x);
}

TEST_CASE("scalar serialization") {
  Quad lambda(Rat(-1) / 2, Rat(1) / 2, 5);
  Scalar s(Quad(Rat(2)) - Quad(Rat(3)) * lambda);
  Json j = to_json(s);
  CHECK(j.contains("exact"));
  CHECK(j["exact"] == "7/2-3/2*sqrt5");
  Json f = to_json(Scalar::approx(0.25));
  CHECK(f.contains("float"));
}

TEST_CASE("deterministic artifacts") {
  // two independent builds serialize identically
  auto dump = [] {
    FactorSet f = FactorSet::build(fibonacci_generator(), 12);
    Json j;
    j["factors"] = to_json(f);
    Json codes = Json::array();
    for (const CodeSet& x : enumerate_F_maximal_bifix(f, 3)) codes.push_back(to_json(x));
    j["codes"] = codes;
    j["automaton"] = to_json(coset_automaton(CodeSet{"a", "bab", "baab"}, f.alphabet()));
    j["measure"] = to_json(invariant_distribution(f), f);
    return j.dump();
  };
  CHECK(dump() == dump());
}

TEST_CASE("factor JSON layout") {
  FactorSet f = FactorSet::build(fibonacci_generator(), 3);
  Json j = to_json(f);
  CHECK(j["alphabet"] == Json::array({"a", "b"}));
  CHECK(j["depth"] == 3);
  CHECK(j["factors"]["2"] == Json::array({"aa", "ab", "ba"}));
}
