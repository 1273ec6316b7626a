#ifndef BIFIX_GENERATOR_HPP
#define BIFIX_GENERATOR_HPP

#include <string>
#include <utility>

#include "bifix/episturmian.hpp"
#include "bifix/word.hpp"

namespace bifix {

// Finite description of an infinite word: a substitution fix-point, the
// iterated palindromic closure of an eventually periodic directive word,
// or an eventually periodic word u v^omega.
class WordGenerator {
public:
  enum class Kind { fixpoint, pal, evper };

  static WordGenerator fixpoint(Substitution f, char start) {
    f.validate();
    WordGenerator g;
    g.kind_ = Kind::fixpoint;
    g.subst_ = std::move(f);
    g.start_ = start;
    g.alphabet_ = g.subst_.alphabet();
    const Word& img = g.subst_.of(start);
    if (img.size() < 2 || img[0] != start)
      throw PreconditionError("fix-point requires f(a) to start with a and |f(a)| >= 2");
    return g;
  }

  static WordGenerator pal(DirectiveWord delta) {
    WordGenerator g;
    g.kind_ = Kind::pal;
    g.directive_ = std::move(delta);
    g.alphabet_ = Alphabet(g.directive_.preperiod + g.directive_.period);
    return g;
  }

  static WordGenerator eventually_periodic(Word preperiod, Word period) {
    if (period.empty()) throw PreconditionError("eventually periodic generator needs a nonempty period");
    WordGenerator g;
    g.kind_ = Kind::evper;
    g.preperiod_ = std::move(preperiod);
    g.period_ = std::move(period);
    g.alphabet_ = Alphabet(g.preperiod_ + g.period_);
    return g;
  }

  Kind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Substitution& substitution() const { return subst_; }
  char start_symbol() const { return start_; }
  const DirectiveWord& directive() const { return directive_; }
  const Word& evper_preperiod() const { return preperiod_; }
  const Word& evper_period() const { return period_; }

  // Prefix of length n of the generated infinite word.
  Word prefix(size_t n) const {
    switch (kind_) {
      case Kind::fixpoint: {
        Word w(1, start_);
        while (w.size() < n) w = subst_.apply(w);
        w.resize(n);
        return w;
      }
      case Kind::pal: {
        // u_{m+1} = psi_{a_0..a_{m-1}}(a_m) u_m ; each step prepends the
        // next block, so we build the prefix back to front.
        Word u;
        size_t m = 0;
        while (u.size() < n) {
          Word head = episturmian_image(directive_.prefix(m), Word(1, directive_.letter(m)));
          u = head + u;
          ++m;
        }
        u.resize(n);
        return u;
      }
      case Kind::evper: {
        Word w = preperiod_;
        while (w.size() < n) w += period_;
        w.resize(n);
        return w;
      }
    }
    throw Error("unreachable");
  }

  // Generator shifted by one position; exact only for eventually periodic
  // words, which is all the periodicity module needs.
  WordGenerator shifted(size_t offset) const {
    if (kind_ != Kind::evper) throw PreconditionError("shift is only defined for eventually periodic generators");
    Word pre = preperiod_, per = period_;
    for (size_t i = 0; i < offset; ++i) {
      if (!pre.empty()) {
        pre.erase(pre.begin());
      } else {
        per = per.substr(1) + per[0];
      }
    }
    return eventually_periodic(pre, per);
  }

  // Textual spec: "fixpoint:a->ab,b->a@a" | "pal:(ab)^w" | "pal:c,(ab)^w"
  // | "evper:u,v".
  static WordGenerator parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("generator spec needs '<kind>:'");
    std::string kind = spec.substr(0, colon);
    std::string body = spec.substr(colon + 1);
    if (kind == "fixpoint") {
      auto at = body.find('@');
      if (at == std::string::npos) throw ParseError("fixpoint spec needs '@<start>'");
      if (at + 2 != body.size()) throw ParseError("fixpoint start must be a single symbol");
      char start = body[at + 1];
      Substitution f;
      std::string rules = body.substr(0, at);
      size_t pos = 0;
      while (pos < rules.size()) {
        auto comma = rules.find(',', pos);
        std::string rule = rules.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto arrow = rule.find("->");
        if (arrow != 1) throw ParseError("fixpoint rule must look like 'a->ab'");
        f.image[rule[0]] = rule.substr(arrow + 2);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return fixpoint(std::move(f), start);
    }
    if (kind == "pal") {
      Word pre;
      auto comma = body.find(',');
      if (comma != std::string::npos) {
        pre = body.substr(0, comma);
        body = body.substr(comma + 1);
      }
      if (body.size() < 4 || body[0] != '(' || body.substr(body.size() - 3) != ")^w")
        throw ParseError("pal period must look like '(ab)^w'");
      Word per = body.substr(1, body.size() - 4);
      return pal(DirectiveWord(pre, per));
    }
    if (kind == "evper") {
      auto comma = body.find(',');
      if (comma == std::string::npos) throw ParseError("evper spec is 'evper:<preperiod>,<period>'");
      return eventually_periodic(body.substr(0, comma), body.substr(comma + 1));
    }
    throw ParseError("unknown generator kind '" + kind + "'");
  }

  std::string spec_string() const {
    switch (kind_) {
      case Kind::fixpoint: {
        std::string s = "fixpoint:";
        bool first = true;
        for (const auto& [c, img] : subst_.image) {
          if (!first) s += ',';
          first = false;
          s += c;
          s += "->";
          s += img;
        }
        s += '@';
        s += start_;
        return s;
      }
      case Kind::pal: {
        std::string s = "pal:";
        if (!directive_.preperiod.empty()) s += directive_.preperiod + ",";
        return s + "(" + directive_.period + ")^w";
      }
      case Kind::evper:
        return "evper:" + preperiod_ + "," + period_;
    }
    throw Error("unreachable");
  }

private:
  Kind kind_ = Kind::evper;
  Alphabet alphabet_;
  Substitution subst_;
  char start_ = 0;
  DirectiveWord directive_;
  Word preperiod_, period_;
};

inline WordGenerator fibonacci_generator() {
  Substitution f;
  f.image['a'] = "ab";
  f.image['b'] = "a";
  return WordGenerator::fixpoint(std::move(f), 'a');
}

inline WordGenerator thue_morse_generator() {
  Substitution f;
  f.image['a'] = "ab";
  f.image['b'] = "ba";
  return WordGenerator::fixpoint(std::move(f), 'a');
}

inline WordGenerator tribonacci_generator() {
  Substitution f;
  f.image['a'] = "ab";
  f.image['b'] = "ac";
  f.image['c'] = "a";
  return WordGenerator::fixpoint(std::move(f), 'a');
}

} // namespace bifix

#endif
