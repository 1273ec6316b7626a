#ifndef BIFIX_FREE_GROUP_HPP
#define BIFIX_FREE_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "bifix/automaton.hpp"
#include "bifix/word.hpp"

namespace bifix {

// Element of the free group as a reduced word; a letter is +(i+1) for
// alphabet symbol i and -(i+1) for its inverse.
struct GroupWord {
  std::vector<int> letters;

  bool identity() const { return letters.empty(); }
};

inline GroupWord reduce(std::vector<int> seq) {
  GroupWord g;
  for (int l : seq) {
    if (l == 0) throw PreconditionError("0 is not a group letter");
    if (!g.letters.empty() && g.letters.back() == -l)
      g.letters.pop_back();
    else
      g.letters.push_back(l);
  }
  return g;
}

inline GroupWord group_word_from(const Word& w, const Alphabet& a) {
  std::vector<int> seq;
  for (char c : w) seq.push_back(int(a.index(c)) + 1);
  return reduce(seq);
}

// Parses "ab'a" style input: an apostrophe inverts the preceding letter.
inline GroupWord parse_group_word(const std::string& s, const Alphabet& a) {
  std::vector<int> seq;
  for (char c : s) {
    if (c == '\'') {
      if (seq.empty()) throw ParseError("dangling inverse marker");
      seq.back() = -seq.back();
    } else if (c == ' ') {
      continue;
    } else {
      if (!a.contains(c)) throw ParseError(std::string("symbol '") + c + "' outside A and A^-1");
      seq.push_back(int(a.index(c)) + 1);
    }
  }
  return reduce(seq);
}

inline std::string group_word_str(const GroupWord& g, const Alphabet& a) {
  if (g.identity()) return "1";
  std::string s;
  for (int l : g.letters) {
    s += a.symbol(size_t(std::abs(l)) - 1);
    if (l < 0) s += '\'';
  }
  return s;
}

struct SubgroupStats {
  size_t vertices = 0;
  size_t edges = 0;
  size_t rank = 0;
  bool complete = false;
  std::optional<size_t> index; // defined exactly when complete
};

// Folded, base-pointed, letter-labeled graph of a positively generated
// subgroup: deterministic and codeterministic per letter.
class StallingsGraph {
public:
  static StallingsGraph fold_words(const std::vector<Word>& generators, const Alphabet& alphabet,
                                   std::optional<unsigned> shuffle_seed = std::nullopt) {
    // bouquet of labeled cycles at the base vertex
    std::vector<std::array<size_t, 3>> edges; // {from, letter, to}
    size_t n = 1;
    for (const Word& w : generators) {
      if (w.empty()) continue;
      size_t prev = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        size_t next = i + 1 == w.size() ? 0 : n++;
        edges.push_back({prev, alphabet.index(w[i]), next});
        prev = next;
      }
    }
    if (shuffle_seed) {
      std::mt19937 rng(*shuffle_seed);
      std::shuffle(edges.begin(), edges.end(), rng);
    }

    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    auto unite = [&](int x, int y) { uf[find(x)] = find(y); };

    // Fold to fixpoint: identify targets of equal-label out-edges and
    // sources of equal-label in-edges.
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<int, size_t>, int> out, in;
      for (const auto& e : edges) {
        int from = find(int(e[0])), to = find(int(e[2]));
        size_t letter = e[1];
        auto [ito, fresh_o] = out.emplace(std::make_pair(from, letter), to);
        if (!fresh_o && find(ito->second) != to) {
          unite(find(ito->second), to);
          changed = true;
          break;
        }
        auto [iti, fresh_i] = in.emplace(std::make_pair(to, letter), from);
        if (!fresh_i && find(iti->second) != from) {
          unite(find(iti->second), from);
          changed = true;
          break;
        }
      }
    }

    StallingsGraph g;
    g.alphabet_ = alphabet;
    std::map<int, size_t> remap;
    auto id_of = [&](int root) {
      auto [it, fresh] = remap.emplace(root, remap.size());
      return it->second;
    };
    id_of(find(0)); // base first
    std::set<std::array<size_t, 3>> dedup;
    for (const auto& e : edges)
      dedup.insert({id_of(find(int(e[0]))), e[1], id_of(find(int(e[2])))});
    size_t m = remap.size();
    g.out_.assign(m, std::vector<int>(alphabet.size(), -1));
    g.in_.assign(m, std::vector<int>(alphabet.size(), -1));
    for (const auto& e : dedup) {
      g.out_[e[0]][e[1]] = int(e[2]);
      g.in_[e[2]][e[1]] = int(e[0]);
      ++g.edge_count_;
    }
    return g.bfs_normalized();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  size_t size() const { return out_.size(); }
  size_t edges() const { return edge_count_; }

  int step(int v, int letter) const {
    if (v < 0) return -1;
    return letter > 0 ? out_[v][letter - 1] : in_[v][-letter - 1];
  }

  SubgroupStats stats() const {
    SubgroupStats s;
    s.vertices = size();
    s.edges = edge_count_;
    s.rank = edge_count_ + 1 - size();
    s.complete = true;
    for (const auto& row : out_)
      for (int t : row)
        if (t < 0) s.complete = false;
    if (s.complete) s.index = size();
    return s;
  }

  bool member(const GroupWord& g) const {
    int v = 0;
    for (int l : g.letters) {
      v = step(v, l);
      if (v < 0) return false;
    }
    return v == 0;
  }

  // Free basis of the described subgroup: one generator per edge outside a
  // spanning tree, as tree-path . edge . reverse tree-path. Debugging aid;
  // the element order is not part of the contract.
  std::vector<GroupWord> basis() const {
    std::vector<std::vector<int>> path_to(size()); // reduced letters base -> v
    std::vector<bool> seen(size(), false);
    std::set<std::array<int, 3>> tree;
    std::queue<size_t> q;
    seen[0] = true;
    q.push(0);
    while (!q.empty()) {
      size_t v = q.front();
      q.pop();
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        int fwd = out_[v][a];
        if (fwd >= 0 && !seen[fwd]) {
          seen[fwd] = true;
          path_to[fwd] = path_to[v];
          path_to[fwd].push_back(int(a) + 1);
          tree.insert({int(v), int(a), fwd});
          q.push(size_t(fwd));
        }
        int bwd = in_[v][a];
        if (bwd >= 0 && !seen[bwd]) {
          seen[bwd] = true;
          path_to[bwd] = path_to[v];
          path_to[bwd].push_back(-(int(a) + 1));
          tree.insert({bwd, int(a), int(v)});
          q.push(size_t(bwd));
        }
      }
    }
    std::vector<GroupWord> out;
    for (size_t v = 0; v < size(); ++v)
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        int t = out_[v][a];
        if (t < 0 || tree.count({int(v), int(a), t})) continue;
        std::vector<int> seq = path_to[v];
        seq.push_back(int(a) + 1);
        for (auto it = path_to[t].rbegin(); it != path_to[t].rend(); ++it) seq.push_back(-*it);
        out.push_back(reduce(seq));
      }
    return out;
  }

  // Canonical description: base-pointed BFS relabel of the out-edge table;
  // equal strings mean base-preserving labeled isomorphism. Every vertex
  // of a graph folded from positive words lies on a positive base loop, so
  // out-edges alone reach everything.
  std::string canonical_form() const { return canonical_out_table(out_); }

  static std::string canonical_out_table(const std::vector<std::vector<int>>& out) {
    size_t n = out.size();
    size_t k = n ? out[0].size() : 0;
    std::vector<int> order(n, -1);
    std::vector<size_t> seq;
    std::queue<size_t> q;
    order[0] = 0;
    seq.push_back(0);
    q.push(0);
    while (!q.empty()) {
      size_t v = q.front();
      q.pop();
      for (size_t a = 0; a < k; ++a) {
        int t = out[v][a];
        if (t >= 0 && order[t] < 0) {
          order[t] = int(seq.size());
          seq.push_back(t);
          q.push(t);
        }
      }
    }
    std::ostringstream os;
    for (size_t i = 0; i < seq.size(); ++i) {
      os << i << ":";
      for (size_t a = 0; a < k; ++a) {
        int t = out[seq[i]][a];
        os << (t < 0 ? -1 : order[t]) << ",";
      }
      os << ";";
    }
    os << "|" << seq.size();
    return os.str();
  }

  StallingsGraph bfs_normalized() const {
    std::vector<int> order(size(), -1);
    std::vector<size_t> seq;
    std::queue<size_t> q;
    order[0] = 0;
    seq.push_back(0);
    q.push(0);
    while (!q.empty()) {
      size_t v = q.front();
      q.pop();
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        for (int t : {out_[v][a], in_[v][a]})
          if (t >= 0 && order[t] < 0) {
            order[t] = int(seq.size());
            seq.push_back(t);
            q.push(t);
          }
      }
    }
    if (seq.size() != size()) throw Error("Stallings graph is not connected");
    StallingsGraph g;
    g.alphabet_ = alphabet_;
    g.edge_count_ = edge_count_;
    g.out_.assign(size(), std::vector<int>(alphabet_.size(), -1));
    g.in_.assign(size(), std::vector<int>(alphabet_.size(), -1));
    for (size_t v = 0; v < size(); ++v)
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        int t = out_[v][a];
        if (t >= 0) {
          g.out_[order[v]][a] = order[t];
          g.in_[order[t]][a] = order[v];
        }
      }
    return g;
  }

  const std::vector<std::vector<int>>& out() const { return out_; }

  std::string to_dot(const std::string& name = "stallings") const {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  1 [shape=doublecircle];\n";
    for (size_t v = 0; v < out_.size(); ++v)
      for (size_t a = 0; a < alphabet_.size(); ++a)
        if (out_[v][a] >= 0)
          os << "  " << (v + 1) << " -> " << (out_[v][a] + 1) << " [label=\""
             << alphabet_.symbol(a) << "\"];\n";
    os << "}\n";
    return os.str();
  }

private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> out_, in_;
  size_t edge_count_ = 0;
};

inline StallingsGraph stallings(const CodeSet& x, const Alphabet& alphabet) {
  if (x.empty()) throw PreconditionError("need at least one generator");
  return StallingsGraph::fold_words(x.words(), alphabet);
}

inline StallingsGraph stallings(const CodeSet& x) {
  return stallings(x, Alphabet::from_words(x.words()));
}

inline bool is_basis(const CodeSet& x, const Alphabet& alphabet) {
  return stallings(x, alphabet).stats().rank == x.size();
}

inline bool is_basis(const CodeSet& x) { return is_basis(x, Alphabet::from_words(x.words())); }

// A reversible simple automaton and a folded Stallings graph are the same
// kind of object up to numbering; compare canonical out-tables.
inline std::string canonical_form(const Dfa& a) {
  return StallingsGraph::canonical_out_table(a.delta());
}

// Number of subgroups of index d of the free group of rank k (Hall).
inline boost::multiprecision::cpp_int hall_count(size_t d, size_t k) {
  if (d < 1 || k < 1) throw PreconditionError("hall_count needs d, k >= 1");
  using boost::multiprecision::cpp_int;
  auto power = [](cpp_int base, size_t e) {
    cpp_int r = 1;
    for (size_t i = 0; i < e; ++i) r *= base;
    return r;
  };
  std::vector<cpp_int> fact(d + 1, 1);
  for (size_t i = 1; i <= d; ++i) fact[i] = fact[i - 1] * i;
  std::vector<cpp_int> n(d + 1, 0);
  n[1] = 1;
  for (size_t i = 2; i <= d; ++i) {
    cpp_int v = cpp_int(i) * power(fact[i], k - 1);
    for (size_t j = 1; j < i; ++j) v -= power(fact[i - j], k - 1) * n[j];
    n[i] = v;
  }
  return n[d];
}

} // namespace bifix

#endif
