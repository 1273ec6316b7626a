#ifndef BIFIX_WORD_HPP
#define BIFIX_WORD_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bifix/errors.hpp"

namespace bifix {

// Words are strings over single-character symbols; "" is the empty word.
using Word = std::string;

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

inline bool is_factor(const Word& f, const Word& w) {
  return w.find(f) != Word::npos;
}

inline bool prefix_comparable(const Word& u, const Word& v) {
  return is_prefix(u, v) || is_prefix(v, u);
}

inline bool suffix_comparable(const Word& u, const Word& v) {
  return is_suffix(u, v) || is_suffix(v, u);
}

inline size_t occurrence_count(const Word& u, const Word& w) {
  if (u.empty()) return w.size() + 1;
  size_t n = 0;
  for (size_t pos = w.find(u); pos != Word::npos; pos = w.find(u, pos + 1)) ++n;
  return n;
}

// Orders words by length first, then lexicographically. This is the
// canonical order used for all deterministic enumeration output.
inline bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

// Ordered set of distinct symbols. The symbol order fixes every
// lexicographic ordering downstream.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    if (symbols_.empty()) throw PreconditionError("alphabet must be nonempty");
  }

  static Alphabet from_words(const std::vector<Word>& words) {
    std::string s;
    for (const auto& w : words) s += w;
    return Alphabet(s);
  }

  size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(size_t i) const { return symbols_.at(i); }
  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }

  size_t index(char c) const {
    auto p = symbols_.find(c);
    if (p == std::string::npos) throw PreconditionError(std::string("symbol '") + c + "' not in alphabet");
    return p;
  }

  bool contains_word(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
  }

  friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.symbols_ == y.symbols_; }

private:
  std::string symbols_;
};

// Monoid morphism given by the images of the letters; images are nonempty.
struct Substitution {
  std::map<char, Word> image;

  const Word& of(char c) const {
    auto it = image.find(c);
    if (it == image.end()) throw PreconditionError(std::string("no image for symbol '") + c + "'");
    return it->second;
  }

  Word apply(const Word& w) const {
    Word out;
    for (char c : w) out += of(c);
    return out;
  }

  Alphabet alphabet() const {
    std::string s;
    for (const auto& [c, img] : image) {
      s += c;
      s += img;
    }
    return Alphabet(s);
  }

  void validate() const {
    if (image.empty()) throw PreconditionError("substitution has no rules");
    Alphabet a = alphabet();
    for (char c : a.symbols()) {
      auto it = image.find(c);
      if (it == image.end()) throw PreconditionError(std::string("no image for symbol '") + c + "'");
      if (it->second.empty()) throw PreconditionError("substitution image must be nonempty");
    }
  }

  // Incidence matrix m[i][j] = number of occurrences of symbol j in the
  // image of symbol i.
  std::vector<std::vector<long>> incidence_matrix(const Alphabet& a) const {
    std::vector<std::vector<long>> m(a.size(), std::vector<long>(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
      for (char c : of(a.symbol(i))) m[i][a.index(c)]++;
    return m;
  }

  // Primitive: some power of the incidence matrix is strictly positive.
  bool is_primitive() const {
    Alphabet a = alphabet();
    size_t k = a.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    auto m = incidence_matrix(a);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) reach[i][j] = m[i][j] > 0;
    // Power up; k*k steps suffice for the support to stabilize.
    for (size_t step = 0; step < k * k; ++step) {
      bool all = true;
      std::vector<std::vector<bool>> nxt(k, std::vector<bool>(k, false));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
          if (!reach[i][j]) all = false;
          for (size_t l = 0; l < k; ++l)
            if (m[i][l] > 0 && reach[l][j]) nxt[i][j] = true;
        }
      if (all) return true;
      reach = nxt;
    }
    for (const auto& row : reach)
      for (bool b : row)
        if (!b) return false;
    return true;
  }
};

} // namespace bifix

#endif
