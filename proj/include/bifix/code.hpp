#ifndef BIFIX_CODE_HPP
#define BIFIX_CODE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bifix/factor_set.hpp"
#include "bifix/word.hpp"

namespace bifix {

// Finite set of nonempty words in canonical shortlex order.
class CodeSet {
public:
  CodeSet() = default;
  explicit CodeSet(std::vector<Word> words) {
    for (const Word& w : words)
      if (w.empty()) throw PreconditionError("code words must be nonempty");
    std::sort(words.begin(), words.end(), shortlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
    set_.insert(words_.begin(), words_.end());
  }
  CodeSet(std::initializer_list<Word> ws) : CodeSet(std::vector<Word>(ws)) {}

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const { return set_.count(w) > 0; }
  const std::vector<Word>& words() const { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  size_t max_length() const {
    size_t m = 0;
    for (const Word& w : words_) m = std::max(m, w.size());
    return m;
  }

  bool has_suffix_of(const Word& w) const {
    for (size_t l = 1; l <= w.size(); ++l)
      if (set_.count(w.substr(w.size() - l))) return true;
    return false;
  }

  bool has_prefix_of(const Word& w) const {
    for (size_t l = 1; l <= w.size(); ++l)
      if (set_.count(w.substr(0, l))) return true;
    return false;
  }

  CodeSet with(const Word& w) const {
    auto ws = words_;
    ws.push_back(w);
    return CodeSet(ws);
  }

  friend bool operator==(const CodeSet& x, const CodeSet& y) { return x.words_ == y.words_; }
  friend bool operator<(const CodeSet& x, const CodeSet& y) {
    return std::lexicographical_compare(x.words_.begin(), x.words_.end(), y.words_.begin(),
                                        y.words_.end(), shortlex_less);
  }

private:
  std::vector<Word> words_;
  std::unordered_set<Word> set_;
};

struct CodeFlags {
  bool prefix = false;
  bool suffix = false;
  bool bifix = false;
};

inline CodeFlags classify_code(const CodeSet& x) {
  CodeFlags f{true, true, true};
  const auto& ws = x.words();
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j) {
      if (i == j) continue;
      if (is_prefix(ws[i], ws[j])) f.prefix = false;
      if (is_suffix(ws[i], ws[j])) f.suffix = false;
    }
  f.bifix = f.prefix && f.suffix;
  return f;
}

enum class CodeKind { prefix, suffix, bifix };

struct MaximalityReport {
  bool maximal = false;
  std::optional<Word> witness; // a word of F incomparable with X, on failure
};

// F-maximality via the density criterion: every word of F of length
// max|x| must have a prefix (resp. suffix) in X; shorter words of F extend
// to those because the window is right essential.
inline MaximalityReport is_F_maximal(const CodeSet& x, const FactorSet& f, CodeKind kind) {
  for (const Word& w : x)
    if (!f.contains(w)) throw PreconditionError("code is not contained in the factor set");
  if (x.empty()) {
    MaximalityReport r;
    r.maximal = false;
    r.witness = f.words_of_length(1).front();
    return r;
  }
  size_t n = x.max_length();
  if (n + 1 > f.depth()) throw WindowError("maximality check needs depth >= max|x| + 1");

  auto check = [&](CodeKind k) -> std::optional<Word> {
    for (const Word& w : f.words_of_length(n)) {
      bool covered = k == CodeKind::prefix ? x.has_prefix_of(w) : x.has_suffix_of(w);
      if (!covered) return w;
    }
    return std::nullopt;
  };

  MaximalityReport r;
  if (kind == CodeKind::prefix || kind == CodeKind::bifix) {
    if (auto w = check(CodeKind::prefix)) {
      r.witness = w;
      return r;
    }
  }
  if (kind == CodeKind::suffix || kind == CodeKind::bifix) {
    if (auto w = check(CodeKind::suffix)) {
      r.witness = w;
      return r;
    }
  }
  r.maximal = true;
  return r;
}

struct ParseTriple {
  Word before;              // no suffix in X
  std::vector<Word> middle; // factorization of the X* part
  Word after;               // no prefix in X
};

namespace detail {

// X*-membership table for all prefixes of w viewed as middle segments:
// dec[i][j] true iff w[i..j) is in X*.
inline std::vector<std::vector<bool>> star_table(const Word& w, const CodeSet& x) {
  size_t n = w.size();
  std::vector<std::vector<bool>> dec(n + 1, std::vector<bool>(n + 1, false));
  for (size_t i = 0; i <= n; ++i) {
    dec[i][i] = true;
    for (size_t j = i + 1; j <= n; ++j)
      for (size_t m = i; m < j && !dec[i][j]; ++m)
        if (dec[i][m] && x.contains(w.substr(m, j - m))) dec[i][j] = true;
  }
  return dec;
}

inline std::vector<Word> star_factorization(const Word& w, size_t i, size_t j, const CodeSet& x,
                                            const std::vector<std::vector<bool>>& dec) {
  std::vector<Word> out;
  size_t pos = i;
  while (pos < j) {
    for (size_t m = pos + 1; m <= j; ++m)
      if (x.contains(w.substr(pos, m - pos)) && dec[m][j]) {
        out.push_back(w.substr(pos, m - pos));
        pos = m;
        break;
      }
  }
  return out;
}

} // namespace detail

// All parses (v, x, u) of w: w = vxu with v having no suffix in X, x in X*
// and u having no prefix in X.
inline std::vector<ParseTriple> parses(const Word& w, const CodeSet& x) {
  auto dec = detail::star_table(w, x);
  std::vector<ParseTriple> out;
  size_t n = w.size();
  for (size_t i = 0; i <= n; ++i) {
    Word before = w.substr(0, i);
    if (x.has_suffix_of(before)) continue;
    for (size_t j = i; j <= n; ++j) {
      if (!dec[i][j]) continue;
      Word after = w.substr(j);
      if (x.has_prefix_of(after)) continue;
      out.push_back({before, detail::star_factorization(w, i, j, x, dec), after});
    }
  }
  return out;
}

inline size_t parse_count(const Word& w, const CodeSet& x) { return parses(w, x).size(); }

// Parse enumerator over the stored words of F, filled by the left-to-right
// recurrence pars(wa) = pars(w) + [wa has no suffix in X]; requires X
// prefix. An optional cap d stores min(d, pars) together with the
// membership marks wa in A*X read off the capped values.
class ParseProfile {
public:
  ParseProfile(const CodeSet& x, const FactorSet& f, std::optional<size_t> cap = std::nullopt)
      : cap_(cap) {
    if (!classify_code(x).prefix) throw PreconditionError("parse profile needs a prefix code");
    values_[Word()] = 1;
    in_astar_x_[Word()] = false;
    for (size_t l = 1; l <= f.depth(); ++l)
      for (const Word& w : f.words_of_length(l)) {
        Word parent = w.substr(0, w.size() - 1);
        bool ends_in_x = x.has_suffix_of(w);
        size_t v = values_.at(parent) + (ends_in_x ? 0 : 1);
        if (cap_) v = std::min(v, *cap_);
        values_[w] = v;
        in_astar_x_[w] = cap_ ? (v == values_.at(parent)) : ends_in_x;
      }
  }

  size_t at(const Word& w) const {
    auto it = values_.find(w);
    if (it == values_.end()) throw PreconditionError("word is outside the profiled factor set");
    return it->second;
  }

  bool in_astar_x(const Word& w) const {
    auto it = in_astar_x_.find(w);
    if (it == in_astar_x_.end()) throw PreconditionError("word is outside the profiled factor set");
    return it->second;
  }

  std::optional<size_t> cap() const { return cap_; }

private:
  std::optional<size_t> cap_;
  std::unordered_map<Word, size_t> values_;
  std::unordered_map<Word, bool> in_astar_x_;
};

inline ParseProfile parse_profile(const CodeSet& x, const FactorSet& f,
                                  std::optional<size_t> cap = std::nullopt) {
  return ParseProfile(x, f, cap);
}

// Internal factors of the words of X (including the empty word whenever
// some word of X has length >= 2).
inline std::set<Word, ShortlexLess> internal_factors(const CodeSet& x) {
  std::set<Word, ShortlexLess> out;
  for (const Word& w : x)
    for (size_t i = 1; i < w.size(); ++i)
      for (size_t len = 0; i + len + 1 <= w.size(); ++len) out.insert(w.substr(i, len));
  return out;
}

struct BifixAnalysis {
  size_t degree = 0;
  CodeSet kernel;
  std::vector<Word> internal; // I(X), exact finite set
  std::vector<Word> proper_prefixes;
  std::vector<Word> proper_suffixes;
  Word witness; // shortest word of F outside I(X)
};

inline std::vector<Word> proper_prefixes(const CodeSet& x) {
  std::set<Word, ShortlexLess> out;
  for (const Word& w : x)
    for (size_t l = 0; l < w.size(); ++l) out.insert(w.substr(0, l));
  return {out.begin(), out.end()};
}

inline std::vector<Word> proper_suffixes(const CodeSet& x) {
  std::set<Word, ShortlexLess> out;
  for (const Word& w : x)
    for (size_t l = 0; l < w.size(); ++l) out.insert(w.substr(w.size() - l));
  return {out.begin(), out.end()};
}

// Degree, kernel and boundary data of a finite F-maximal bifix code. The
// degree witness is the shortest (then lexicographically least) word of F
// outside I(X).
inline BifixAnalysis analyze(const CodeSet& x, const FactorSet& f) {
  if (x.empty()) throw PreconditionError("cannot analyze the empty code");
  if (!classify_code(x).bifix) throw PreconditionError("analyze needs a bifix code");
  auto max_report = is_F_maximal(x, f, CodeKind::bifix);
  if (!max_report.maximal) throw PreconditionError("analyze needs an F-maximal bifix code");

  BifixAnalysis a;
  auto internal = internal_factors(x);
  a.internal.assign(internal.begin(), internal.end());
  std::vector<Word> kernel_words;
  for (const Word& w : x)
    if (internal.count(w)) kernel_words.push_back(w);
  a.kernel = CodeSet(kernel_words);
  a.proper_prefixes = proper_prefixes(x);
  a.proper_suffixes = proper_suffixes(x);

  bool found = false;
  for (size_t l = 0; l <= f.depth() && !found; ++l)
    for (const Word& w : f.words_of_length(l))
      if (!internal.count(w)) {
        a.witness = w;
        found = true;
        break;
      }
  if (!found) throw WindowError("no word of F outside I(X) within the window");
  a.degree = parse_count(a.witness, x);
  return a;
}

inline size_t f_degree(const CodeSet& x, const FactorSet& f) { return analyze(x, f).degree; }

// Max parse count over the window, with a one-layer stabilization check;
// works for codes that need not be F-maximal (e.g. windowed truncations).
inline size_t f_degree_bound(const CodeSet& x, const FactorSet& f) {
  ParseProfile p(x, f);
  size_t top = 0, below = 0;
  for (const Word& w : f.words_of_length(f.depth())) top = std::max(top, p.at(w));
  for (const Word& w : f.words_of_length(f.depth() - 1)) below = std::max(below, p.at(w));
  if (top != below) throw WindowError("parse counts still growing at the window boundary");
  return top;
}

// Derived code X' = K union (G cap D) with G = (IA cap F) \ I and
// D = (AI cap F) \ I; drops the F-degree by exactly one.
inline CodeSet derived_code(const CodeSet& x, const FactorSet& f) {
  BifixAnalysis a = analyze(x, f);
  if (a.degree < 2) throw PreconditionError("derived code needs F-degree >= 2");
  std::set<Word, ShortlexLess> internal(a.internal.begin(), a.internal.end());
  std::set<Word, ShortlexLess> g, d;
  for (const Word& h : internal)
    for (char c : f.alphabet().symbols()) {
      Word ha = h + c;
      if (f.contains(ha) && !internal.count(ha)) g.insert(ha);
      Word ah = c + h;
      if (f.contains(ah) && !internal.count(ah)) d.insert(ah);
    }
  std::vector<Word> out(a.kernel.begin(), a.kernel.end());
  for (const Word& w : g)
    if (d.count(w)) out.push_back(w);
  return CodeSet(out);
}

// Whether Y can be the kernel of an F-maximal bifix code of F-degree d:
// Y is not itself F-maximal, and max pars_Y over Y is at most d - 1.
inline bool admissible_kernel(const CodeSet& y, const FactorSet& f, size_t d) {
  if (!classify_code(y).bifix) return false;
  if (!y.empty() && is_F_maximal(y, f, CodeKind::bifix).maximal) return false;
  for (const Word& w : y)
    if (parse_count(w, y) > d - 1) return false;
  return true;
}

// Reconstructs the unique F-maximal bifix code of F-degree d with kernel Y
// from the capped profile min(d, pars_Y): a word is in X iff it is in A*X
// but no proper suffix is.
inline CodeSet code_from_kernel(const CodeSet& y, const FactorSet& f, size_t d) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  if (!admissible_kernel(y, f, d)) throw PreconditionError("inadmissible kernel for this degree");

  ParseProfile p(y, f, d);
  std::vector<Word> words;
  for (size_t l = 1; l <= f.depth(); ++l)
    for (const Word& w : f.words_of_length(l)) {
      if (!p.in_astar_x(w)) continue;
      bool shorter_hit = false;
      for (size_t s = 1; s < w.size() && !shorter_hit; ++s)
        if (p.in_astar_x(w.substr(w.size() - s))) shorter_hit = true;
      if (!shorter_hit) words.push_back(w);
    }
  CodeSet x(words);

  // Closure: no code word may have been cut off by the window.
  for (const Word& w : f.words_of_length(f.depth()))
    if (!x.has_prefix_of(w)) throw WindowError("window exhausted before the code closed");

  if (!classify_code(x).bifix) throw Error("kernel reconstruction did not produce a bifix code");
  if (!is_F_maximal(x, f, CodeKind::bifix).maximal)
    throw Error("kernel reconstruction did not produce an F-maximal code");
  return x;
}

// All finite F-maximal bifix codes of F-degree d, built by degree
// induction: kernels are the admissible proper subsets of the degree-(d-1)
// codes.
inline std::vector<CodeSet> enumerate_F_maximal_bifix(const FactorSet& f, size_t d) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  std::vector<Word> letters;
  for (const Word& w : f.words_of_length(1)) letters.push_back(w);
  std::vector<CodeSet> current = {CodeSet(letters)};
  for (size_t deg = 2; deg <= d; ++deg) {
    std::set<CodeSet> kernels;
    for (const CodeSet& base : current) {
      const auto& ws = base.words();
      size_t n = ws.size();
      for (size_t mask = 0; mask + 1 < (size_t(1) << n); ++mask) {
        std::vector<Word> sub;
        for (size_t i = 0; i < n; ++i)
          if (mask & (size_t(1) << i)) sub.push_back(ws[i]);
        kernels.insert(CodeSet(sub));
      }
    }
    std::set<CodeSet> next;
    for (const CodeSet& y : kernels)
      if (admissible_kernel(y, f, deg)) next.insert(code_from_kernel(y, f, deg));
    current.assign(next.begin(), next.end());
  }
  return current;
}

// Internal transformation with respect to w:
// Y = (X u w u (GwD cap F)) \ (Gw u wD), G = Xw^-1, D = w^-1 X.
inline CodeSet internal_transformation(const CodeSet& x, const FactorSet& f, const Word& w) {
  if (w.empty() || !f.contains(w)) throw PreconditionError("w must be a nonempty word of F");
  std::vector<Word> g, dset;
  for (const Word& v : x) {
    if (v.size() > w.size() && is_suffix(w, v)) g.push_back(v.substr(0, v.size() - w.size()));
    if (v.size() > w.size() && is_prefix(w, v)) dset.push_back(v.substr(w.size()));
  }
  if (x.contains(w)) {
    g.push_back(Word());
    dset.push_back(Word());
  }
  if (g.empty()) throw PreconditionError("G = Xw^-1 is empty");
  if (dset.empty()) throw PreconditionError("D = w^-1X is empty");
  std::set<Word> gw, wd;
  for (const Word& u : g) gw.insert(u + w);
  for (const Word& v : dset) wd.insert(w + v);
  for (const Word& u : gw)
    if (wd.count(u)) throw PreconditionError("Gw and wD intersect");

  std::set<Word> out(x.begin(), x.end());
  out.insert(w);
  for (const Word& u : g)
    for (const Word& v : dset) {
      Word gwd = u + w + v;
      if (gwd.size() > f.depth()) throw WindowError("GwD reaches beyond the factor window");
      if (f.contains(gwd)) out.insert(gwd);
    }
  for (const Word& u : gw) out.erase(u);
  for (const Word& v : wd) out.erase(v);
  CodeSet y(std::vector<Word>(out.begin(), out.end()));

  if (!classify_code(y).bifix || !is_F_maximal(y, f, CodeKind::bifix).maximal)
    throw Error("internal transformation produced a non-maximal or non-bifix set");
  if (f_degree(y, f) != f_degree(x, f)) throw Error("internal transformation changed the degree");
  return y;
}

// Y = (X \ wD) u w for a nonempty prefix w of X; stays F-maximal prefix.
inline CodeSet prefix_shorten(const CodeSet& x, const FactorSet& f, const Word& w) {
  if (w.empty()) throw PreconditionError("w must be nonempty");
  if (!classify_code(x).prefix || !is_F_maximal(x, f, CodeKind::prefix).maximal)
    throw PreconditionError("prefix shortening needs an F-maximal prefix code");
  bool is_pref = false;
  for (const Word& v : x)
    if (is_prefix(w, v)) is_pref = true;
  if (!is_pref) throw PreconditionError("w is not a prefix of X");
  std::vector<Word> out;
  for (const Word& v : x)
    if (!is_prefix(w, v)) out.push_back(v);
  out.push_back(w);
  CodeSet y(out);
  if (!is_F_maximal(y, f, CodeKind::prefix).maximal)
    throw Error("prefix shortening lost F-maximality");
  return y;
}

struct IntersectionReport {
  CodeSet code;
  size_t degree = 0;
};

// Z cap F for an explicit finite Z; complete because every word of Z is
// checked against the window.
inline IntersectionReport intersect_with_F(const CodeSet& z, const FactorSet& f) {
  std::vector<Word> out;
  for (const Word& w : z) {
    if (w.size() > f.depth()) throw WindowError("window too small to certify the intersection");
    if (f.contains(w)) out.push_back(w);
  }
  IntersectionReport r;
  r.code = CodeSet(out);
  r.degree = f_degree(r.code, f);
  return r;
}

struct CompletionResult {
  CodeSet code;
  bool already_maximal = false;
  size_t degree = 0;
};

// Embeds a finite bifix code into a finite F-maximal one. With an explicit
// degree: the kernel completion of the stated degree. By default: the
// smallest degree whose enumeration contains a code including X
// (canonically least such code).
inline CompletionResult complete_bifix(const CodeSet& x, const FactorSet& f,
                                       std::optional<size_t> degree = std::nullopt) {
  if (!classify_code(x).bifix) throw PreconditionError("completion needs a bifix code");
  CompletionResult r;
  if (is_F_maximal(x, f, CodeKind::bifix).maximal) {
    r.code = x;
    r.already_maximal = true;
    r.degree = f_degree(x, f);
    return r;
  }
  if (degree) {
    r.code = code_from_kernel(x, f, *degree);
    r.degree = *degree;
    return r;
  }
  size_t max_pars = 1;
  for (const Word& w : x) max_pars = std::max(max_pars, parse_count(w, x));
  for (size_t d = 1; d <= max_pars + 1; ++d) {
    for (const CodeSet& cand : enumerate_F_maximal_bifix(f, d)) {
      bool contains_all = true;
      for (const Word& w : x)
        if (!cand.contains(w)) contains_all = false;
      if (contains_all) {
        r.code = cand;
        r.degree = d;
        return r;
      }
    }
  }
  throw Error("completion search failed"); // unreachable: kernel completion exists
}

} // namespace bifix

#endif
