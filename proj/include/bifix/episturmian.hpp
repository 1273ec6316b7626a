#ifndef BIFIX_EPISTURMIAN_HPP
#define BIFIX_EPISTURMIAN_HPP

#include <string>
#include <vector>

#include "bifix/word.hpp"

namespace bifix {

inline bool is_palindrome(const Word& w) {
  return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

namespace detail {

// Length of the longest palindromic suffix of w, found as the longest
// prefix of reverse(w) that is also a suffix of w (KMP failure function
// over reverse(w) # w).
inline size_t longest_palindromic_suffix(const Word& w) {
  if (w.empty()) return 0;
  Word t = reversed(w) + '\x01' + w;
  std::vector<size_t> fail(t.size(), 0);
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = fail[i - 1];
    while (j > 0 && t[i] != t[j]) j = fail[j - 1];
    if (t[i] == t[j]) ++j;
    fail[i] = j;
  }
  return fail.back();
}

} // namespace detail

// Shortest palindrome having w as a prefix.
inline Word palindromic_closure(const Word& w) {
  size_t p = detail::longest_palindromic_suffix(w);
  Word head = w.substr(0, w.size() - p);
  return w + reversed(head);
}

// Pal(1) = 1, Pal(ua) = (Pal(u)a)^(+).
inline Word iterated_palindromic_closure(const Word& w) {
  Word u;
  for (char c : w) u = palindromic_closure(u + c);
  return u;
}

// Elementary episturmian morphism: maps a to a and every other letter b
// to ab.
inline Word elementary_morphism_image(char a, const Word& w) {
  Word out;
  out.reserve(2 * w.size());
  for (char c : w) {
    if (c != a) out += a;
    out += c;
  }
  return out;
}

// Image of w under the composition of elementary morphisms directed by u
// (the morphism of letter u[0] applied last).
inline Word episturmian_image(const Word& u, const Word& w) {
  Word out = w;
  for (auto it = u.rbegin(); it != u.rend(); ++it) out = elementary_morphism_image(*it, out);
  return out;
}

// Eventually periodic directive word preperiod . period^omega.
struct DirectiveWord {
  Word preperiod;
  Word period;

  DirectiveWord() = default;
  DirectiveWord(Word pre, Word per) : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) throw PreconditionError("directive word period must be nonempty");
  }

  char letter(size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  Word prefix(size_t n) const {
    Word w;
    w.reserve(n);
    for (size_t i = 0; i < n; ++i) w += letter(i);
    return w;
  }

  // Strict iff every alphabet symbol occurs in the period (so it occurs
  // infinitely often).
  bool strict(const Alphabet& a) const {
    for (char c : a.symbols())
      if (period.find(c) == Word::npos) return false;
    return true;
  }
};

} // namespace bifix

#endif
