// Brute-force oracles kept independent of the implementation paths they
// check.

#ifndef BIFIX_TESTS_ORACLES_HPP
#define BIFIX_TESTS_ORACLES_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using Word = std::string;

inline bool is_pal(const Word& w) {
  return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

// Shortest palindrome with prefix w, by scanning candidate lengths; the
// tail of the candidate is forced by mirroring.
inline Word brute_palindromic_closure(const Word& w) {
  for (size_t len = w.size(); len <= 2 * w.size(); ++len) {
    Word cand = w;
    for (size_t i = w.size(); i < len; ++i) cand += cand[len - 1 - i];
    if (is_pal(cand)) return cand;
  }
  return w; // unreachable: len = 2|w| always works
}

inline size_t brute_least_period(const Word& w) {
  for (size_t n = 1; n < w.size(); ++n) {
    bool ok = true;
    for (size_t i = 0; i + n < w.size(); ++i)
      if (w[i] != w[i + n]) ok = false;
    if (ok) return n;
  }
  return w.size();
}

inline bool prefix_comparable(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  return u.compare(0, n, v, 0, n) == 0;
}

inline bool suffix_comparable(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  return u.compare(u.size() - n, n, v, v.size() - n, n) == 0;
}

// Exhaustive repetition oracle over the alphabet of p and s.
inline size_t brute_repetition(const Word& p, const Word& s) {
  std::set<char> chars(p.begin(), p.end());
  chars.insert(s.begin(), s.end());
  std::vector<char> alpha(chars.begin(), chars.end());
  if (alpha.empty()) alpha.push_back('a');
  std::vector<Word> layer = {Word()};
  for (size_t len = 1; len <= s.size() + p.size(); ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char c : alpha) next.push_back(w + c);
    for (const Word& r : next)
      if (prefix_comparable(r, s) && suffix_comparable(r, p)) return len;
    layer = std::move(next);
  }
  return s.size() + p.size();
}

// Factors of length l occurring in the given finite word.
inline std::set<Word> brute_factors(const Word& text, size_t l) {
  std::set<Word> out;
  if (text.size() < l) return out;
  for (size_t i = 0; i + l <= text.size(); ++i) out.insert(text.substr(i, l));
  return out;
}

// X*-membership by dynamic programming (unique decodability not assumed).
inline bool decodes_over(const Word& w, const std::set<Word>& x) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (size_t i = 1; i <= w.size(); ++i)
    for (const Word& v : x)
      if (v.size() <= i && ok[i - v.size()] && w.compare(i - v.size(), v.size(), v) == 0)
        ok[i] = true;
  return ok[w.size()];
}

inline Word random_word(std::mt19937& rng, size_t max_len, const std::string& alphabet) {
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  Word w;
  size_t n = len(rng);
  for (size_t i = 0; i < n; ++i) w += alphabet[pick(rng)];
  return w;
}

} // namespace oracles

#endif
