#ifndef BIFIX_FACTOR_SET_HPP
#define BIFIX_FACTOR_SET_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "bifix/generator.hpp"
#include "bifix/word.hpp"

namespace bifix {

enum class Side { right, left };

struct FactorQuery {
  bool member = false;
  size_t right_order = 0;
  size_t left_order = 0;
};

struct SpecialWord {
  Word word;
  size_t order = 0;
  bool strict = false;
};

struct ReturnWords {
  Word base;
  std::vector<Word> right;    // first right return words
  std::vector<Word> left;     // first left return words
  std::vector<Word> complete; // base . right = left . base
};

struct StructureProfile {
  std::vector<size_t> complexity; // complexity[l] = Card(F cap A^l), l <= depth
  bool reversal_closed = false;
  std::optional<bool> balanced;   // binary alphabets only
  bool recurrent_within_window = false;
};

// Depth-bounded window of a factorial set: all factors of the generated
// infinite word up to length L, materialized from a prefix that is grown
// by doubling until the top layer stops changing.
class FactorSet {
public:
  static FactorSet build(const WordGenerator& gen, size_t depth, size_t prefix_cap = size_t(1) << 22) {
    if (depth < 1) throw PreconditionError("factor set depth must be >= 1");
    auto provider = [&gen](size_t n) { return gen.prefix(n); };
    FactorSet f = build_from_prefix(provider, depth, prefix_cap);
    f.generator_ = gen;
    f.alphabet_ = gen.alphabet();
    // Letters that never occur (possible for a pal preperiod letter only in
    // degenerate cases) would break alphabet-order assumptions downstream.
    for (char c : f.alphabet_.symbols())
      if (!f.contains(Word(1, c)))
        throw WindowError("alphabet symbol does not occur in the generated word");
    return f;
  }

  // Window over the factors of an explicit suffix of a generated word; the
  // prefix provider must return prefixes of the (shifted) infinite word.
  static FactorSet build_from_prefix(const std::function<Word(size_t)>& provider, size_t depth,
                                     size_t prefix_cap = size_t(1) << 22) {
    size_t n = std::max<size_t>(4 * depth, 16);
    std::optional<std::vector<Word>> prev_top;
    while (true) {
      if (n > prefix_cap) throw WindowError("prefix cap exceeded before factor sets stabilized");
      Word p = provider(n);
      FactorSet f;
      f.depth_ = depth;
      f.fill_from(p);
      if (prev_top && *prev_top == f.by_len_[depth] && f.right_essential()) {
        f.stabilized_ = true;
        f.sample_prefix_ = std::move(p);
        f.alphabet_ = Alphabet::from_words(f.by_len_[1]);
        return f;
      }
      prev_top = f.by_len_[depth];
      n *= 2;
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  size_t depth() const { return depth_; }
  bool stabilized() const { return stabilized_; }
  const WordGenerator& generator() const {
    if (!generator_) throw PreconditionError("factor set was not built from a generator");
    return *generator_;
  }
  const Word& sample_prefix() const { return sample_prefix_; }

  bool contains(const Word& w) const {
    if (w.size() > depth_) throw WindowError("word longer than factor set depth");
    return members_.count(w) > 0;
  }

  const std::vector<Word>& words_of_length(size_t l) const {
    if (l > depth_) throw WindowError("length beyond factor set depth");
    return by_len_[l];
  }

  // All stored words in shortlex order.
  std::vector<Word> all_words() const {
    std::vector<Word> out;
    for (const auto& layer : by_len_) out.insert(out.end(), layer.begin(), layer.end());
    return out;
  }

  size_t right_order(const Word& w) const {
    if (w.size() + 1 > depth_) throw WindowError("right order needs depth > |w|");
    size_t n = 0;
    for (char c : alphabet_.symbols()) n += members_.count(w + c);
    return n;
  }

  size_t left_order(const Word& w) const {
    if (w.size() + 1 > depth_) throw WindowError("left order needs depth > |w|");
    size_t n = 0;
    for (char c : alphabet_.symbols()) n += members_.count(c + w);
    return n;
  }

  FactorQuery query(const Word& w) const {
    if (w.size() >= depth_) throw WindowError("query needs |w| < depth");
    FactorQuery q;
    q.member = members_.count(w) > 0;
    if (q.member) {
      q.right_order = right_order(w);
      q.left_order = left_order(w);
    }
    return q;
  }

  std::vector<SpecialWord> special_words(size_t length, Side side) const {
    if (length >= depth_) throw WindowError("special words need length < depth");
    std::vector<SpecialWord> out;
    for (const Word& w : by_len_[length]) {
      size_t ord = side == Side::right ? right_order(w) : left_order(w);
      if (ord >= 2) out.push_back({w, ord, ord == alphabet_.size()});
    }
    return out;
  }

  StructureProfile structure_profile() const {
    StructureProfile p;
    p.complexity.resize(depth_ + 1);
    for (size_t l = 0; l <= depth_; ++l) p.complexity[l] = by_len_[l].size();

    p.reversal_closed = true;
    for (const auto& layer : by_len_)
      for (const Word& w : layer)
        if (!members_.count(reversed(w))) {
          p.reversal_closed = false;
          break;
        }

    if (alphabet_.size() == 2) {
      char a = alphabet_.symbol(0);
      bool bal = true;
      for (size_t l = 1; l <= depth_ && bal; ++l) {
        size_t lo = l, hi = 0;
        for (const Word& w : by_len_[l]) {
          size_t na = std::count(w.begin(), w.end(), a);
          lo = std::min(lo, na);
          hi = std::max(hi, na);
        }
        if (hi - lo > 1) bal = false;
      }
      p.balanced = bal;
    }

    // For all u,w of length <= depth/4, some v with uvw stored.
    p.recurrent_within_window = true;
    size_t cap = depth_ / 4;
    std::vector<Word> small;
    for (size_t l = 0; l <= cap; ++l) small.insert(small.end(), by_len_[l].begin(), by_len_[l].end());
    for (const Word& u : small) {
      for (const Word& w : small) {
        bool found = false;
        for (size_t l = u.size() + w.size(); l <= depth_ && !found; ++l)
          for (const Word& s : by_len_[l])
            if (is_prefix(u, s) && is_suffix(w, s)) {
              found = true;
              break;
            }
        if (!found) {
          p.recurrent_within_window = false;
          break;
        }
      }
      if (!p.recurrent_within_window) break;
    }
    return p;
  }

  // Complete return words to u are the factors with u as proper prefix and
  // proper suffix and exactly two occurrences of u; they are read off as
  // the gaps between consecutive occurrences of u in the stabilized prefix
  // and validated against the window.
  ReturnWords return_words(const Word& u) const {
    ReturnWords r;
    r.base = u;
    std::vector<size_t> occ;
    if (u.empty()) {
      for (size_t i = 0; i + 1 <= sample_prefix_.size(); ++i) occ.push_back(i);
      occ.push_back(sample_prefix_.size());
    } else {
      for (size_t pos = sample_prefix_.find(u); pos != Word::npos; pos = sample_prefix_.find(u, pos + 1))
        occ.push_back(pos);
    }
    if (occ.size() < 2) throw WindowError("base occurs fewer than twice in the stabilized prefix");

    std::set<Word, ShortlexLess> complete;
    for (size_t i = 0; i + 1 < occ.size(); ++i) {
      size_t len = occ[i + 1] - occ[i] + u.size();
      if (len > depth_) throw WindowError("complete return word exceeds factor set depth");
      Word c = sample_prefix_.substr(occ[i], len);
      if (!members_.count(c) || !is_prefix(u, c) || !is_suffix(u, c) || occurrence_count(u, c) != 2)
        throw Error("return word candidate failed validation");
      complete.insert(c);
    }
    for (const Word& c : complete) {
      r.complete.push_back(c);
      r.right.push_back(c.substr(u.size()));
      r.left.push_back(c.substr(0, c.size() - u.size()));
    }
    std::sort(r.right.begin(), r.right.end(), shortlex_less);
    std::sort(r.left.begin(), r.left.end(), shortlex_less);
    return r;
  }

private:
  void fill_from(const Word& p) {
    by_len_.assign(depth_ + 1, {});
    members_.clear();
    members_.insert(Word());
    by_len_[0].push_back(Word());
    for (size_t l = 1; l <= depth_; ++l) {
      std::set<Word> layer;
      if (p.size() >= l)
        for (size_t i = 0; i + l <= p.size(); ++i) layer.insert(p.substr(i, l));
      by_len_[l].assign(layer.begin(), layer.end());
      members_.insert(layer.begin(), layer.end());
    }
  }

  bool right_essential() const {
    Alphabet a = Alphabet::from_words(by_len_[1]);
    for (size_t l = 0; l + 1 <= depth_; ++l)
      for (const Word& w : by_len_[l]) {
        bool ext = false;
        for (char c : a.symbols())
          if (members_.count(w + c)) {
            ext = true;
            break;
          }
        if (!ext) return false;
      }
    return true;
  }

  Alphabet alphabet_;
  std::optional<WordGenerator> generator_;
  size_t depth_ = 0;
  std::vector<std::vector<Word>> by_len_;
  std::unordered_set<Word> members_;
  bool stabilized_ = false;
  Word sample_prefix_;
};

} // namespace bifix

#endif
