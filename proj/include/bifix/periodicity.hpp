#ifndef BIFIX_PERIODICITY_HPP
#define BIFIX_PERIODICITY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bifix/code.hpp"
#include "bifix/factor_set.hpp"
#include "bifix/word.hpp"

namespace bifix {

// Least period via the KMP failure function: |w| minus the longest border.
inline size_t least_period(const Word& w) {
  if (w.empty()) throw PreconditionError("least period of the empty word");
  std::vector<size_t> fail(w.size(), 0);
  for (size_t i = 1; i < w.size(); ++i) {
    size_t j = fail[i - 1];
    while (j > 0 && w[i] != w[j]) j = fail[j - 1];
    if (w[i] == w[j]) ++j;
    fail[i] = j;
  }
  return w.size() - fail.back();
}

// Minimal length of a nonempty word prefix-comparable with s and
// suffix-comparable with p; r = sp always qualifies, so the scan over
// candidate lengths terminates.
inline size_t repetition(const Word& p, const Word& s) {
  if (p.empty() && s.empty()) throw PreconditionError("repetition needs (p, s) != (1, 1)");
  for (size_t len = 1; len <= s.size() + p.size(); ++len) {
    if (len <= s.size() && len <= p.size()) {
      // r is forced twice over
      if (std::equal(s.begin(), s.begin() + len, p.end() - len)) return len;
    } else if (len <= s.size()) {
      // r = s[0..len) must end with p
      if (std::equal(p.rbegin(), p.rend(), s.rend() - len)) return len;
    } else if (len <= p.size()) {
      // r = suffix of p of length len, must start with s
      if (std::equal(s.begin(), s.end(), p.end() - len)) return len;
    } else {
      // r starts with s and ends with p, total length len <= |s|+|p|:
      // the overlap of s's tail and p's head must agree
      size_t overlap = s.size() + p.size() - len;
      if (std::equal(s.end() - overlap, s.end(), p.begin())) return len;
    }
  }
  return s.size() + p.size();
}

// Critical factorization: the maximum of rep(p, s) over all factorizations
// w = ps equals the least period.
inline size_t cft_least_period(const Word& w) {
  if (w.empty()) throw PreconditionError("least period of the empty word");
  size_t best = 0;
  for (size_t i = 0; i <= w.size(); ++i)
    best = std::max(best, repetition(w.substr(0, i), w.substr(i)));
  return best;
}

// De-Bruijn-style graph of allowed windows: vertices are the words of
// length m-1 avoiding the forbidden factors, edges append one letter.
struct FollowerGraph {
  size_t window = 0; // m-1
  std::vector<Word> vertices;
  std::vector<std::vector<int>> next; // [vertex][letter] -> vertex or -1
  Alphabet alphabet;

  std::string to_dot(const std::vector<int>& scc_of) const {
    std::ostringstream os;
    os << "digraph follower {\n";
    for (size_t v = 0; v < vertices.size(); ++v)
      os << "  " << v << " [label=\"" << (vertices[v].empty() ? "1" : vertices[v])
         << "\", color=" << (scc_of[v] % 9 + 1) << ", colorscheme=set19];\n";
    for (size_t v = 0; v < vertices.size(); ++v)
      for (size_t c = 0; c < alphabet.size(); ++c)
        if (next[v][c] >= 0)
          os << "  " << v << " -> " << next[v][c] << " [label=\"" << alphabet.symbol(c)
             << "\"];\n";
    os << "}\n";
    return os.str();
  }
};

inline FollowerGraph follower_graph(const Alphabet& alphabet, const std::vector<Word>& forbidden) {
  if (forbidden.empty()) throw PreconditionError("forbidden set must be nonempty");
  size_t m = 0;
  for (const Word& w : forbidden) {
    if (w.empty()) throw PreconditionError("forbidden words must be nonempty");
    m = std::max(m, w.size());
  }
  std::set<Word> bad(forbidden.begin(), forbidden.end());
  auto allowed = [&](const Word& w) {
    for (const Word& f : bad)
      if (is_factor(f, w)) return false;
    return true;
  };

  FollowerGraph g;
  g.alphabet = alphabet;
  g.window = m - 1;
  std::vector<Word> layer = {Word()};
  for (size_t l = 0; l < g.window; ++l) {
    std::vector<Word> nxt;
    for (const Word& w : layer)
      for (char c : alphabet.symbols())
        if (allowed(w + c)) nxt.push_back(w + c);
    layer = std::move(nxt);
    if (layer.size() > 2000000) throw Error("follower graph too large");
  }
  g.vertices = layer;
  std::map<Word, size_t> index;
  for (size_t i = 0; i < layer.size(); ++i) index[layer[i]] = i;
  g.next.assign(layer.size(), std::vector<int>(alphabet.size(), -1));
  for (size_t i = 0; i < layer.size(); ++i)
    for (size_t c = 0; c < alphabet.size(); ++c) {
      Word ext = layer[i] + alphabet.symbol(c);
      if (!allowed(ext)) continue;
      Word target = ext.substr(ext.size() - g.window);
      auto it = index.find(target);
      if (it != index.end()) g.next[i][c] = int(it->second);
    }
  return g;
}

struct ForcedPeriodicityReport {
  bool nonempty = false;                // some infinite word avoids the forbidden set
  bool all_ultimately_periodic = false; // every such word has a periodic tail
  std::vector<Word> cycles;             // primitive cycle labels, lex-least rotation
  FollowerGraph graph;
  std::vector<int> scc_of;
};

namespace detail {

inline std::vector<int> graph_scc(const std::vector<std::vector<int>>& next, size_t k) {
  std::vector<std::vector<size_t>> adj(next.size());
  for (size_t v = 0; v < next.size(); ++v)
    for (size_t c = 0; c < k; ++c)
      if (next[v][c] >= 0) adj[v].push_back(size_t(next[v][c]));
  // Tarjan, iterative
  size_t n = adj.size();
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
  std::vector<size_t> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comps = 0;
  std::vector<std::pair<size_t, size_t>> call;
  for (size_t s = 0; s < n; ++s) {
    if (num[s] >= 0) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (ei < adj[v].size()) {
        size_t w = adj[v][ei++];
        if (num[w] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

inline Word least_rotation(Word w) {
  Word best = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

} // namespace detail

// One-sided SFT periodicity check: infinite words avoiding the forbidden
// set exist iff the follower graph has a cycle; all of them are ultimately
// periodic iff every nontrivial SCC is a single simple cycle.
inline ForcedPeriodicityReport forced_periodicity(const Alphabet& alphabet,
                                                  const std::vector<Word>& forbidden) {
  ForcedPeriodicityReport rep;
  rep.graph = follower_graph(alphabet, forbidden);
  size_t k = alphabet.size();
  rep.scc_of = detail::graph_scc(rep.graph.next, k);
  int comps = rep.scc_of.empty() ? 0 : *std::max_element(rep.scc_of.begin(), rep.scc_of.end()) + 1;

  rep.all_ultimately_periodic = true;
  for (int comp = 0; comp < comps; ++comp) {
    std::vector<size_t> members;
    for (size_t v = 0; v < rep.graph.vertices.size(); ++v)
      if (rep.scc_of[v] == comp) members.push_back(v);
    size_t internal_edges = 0;
    bool simple = true;
    for (size_t v : members) {
      size_t out_inside = 0;
      for (size_t c = 0; c < k; ++c) {
        int t = rep.graph.next[v][c];
        if (t >= 0 && rep.scc_of[t] == comp) ++out_inside;
      }
      internal_edges += out_inside;
      if (out_inside > 1) simple = false;
    }
    if (internal_edges == 0) continue; // trivial SCC
    rep.nonempty = true;
    if (!simple || internal_edges != members.size()) {
      rep.all_ultimately_periodic = false;
      continue;
    }
    // simple cycle: read the labels from the lex-least vertex
    size_t start = *std::min_element(members.begin(), members.end(), [&](size_t x, size_t y) {
      return rep.graph.vertices[x] < rep.graph.vertices[y];
    });
    Word label;
    size_t v = start;
    do {
      for (size_t c = 0; c < k; ++c) {
        int t = rep.graph.next[v][c];
        if (t >= 0 && rep.scc_of[t] == comp) {
          label += alphabet.symbol(c);
          v = size_t(t);
          break;
        }
      }
    } while (v != start);
    Word canon = detail::least_rotation(label);
    if (least_period(canon) != canon.size()) throw Error("simple cycle label is not primitive");
    rep.cycles.push_back(canon);
  }
  std::sort(rep.cycles.begin(), rep.cycles.end(), shortlex_less);
  rep.cycles.erase(std::unique(rep.cycles.begin(), rep.cycles.end()), rep.cycles.end());
  return rep;
}

struct StableDegreeReport {
  std::vector<size_t> degrees; // d_{F(shift^i x)}(X) for i = 0..offsets
  bool stable = false;
};

// Degrees of X along the suffixes of the generated word, computed on
// factor windows of the shifted word; X-stable iff the sequence is
// constant.
inline StableDegreeReport x_stable_degree(const CodeSet& x, const WordGenerator& gen,
                                          size_t depth) {
  StableDegreeReport rep;
  for (size_t off = 0; off <= depth / 2; ++off) {
    auto provider = [&gen, off](size_t n) { return gen.prefix(n + off).substr(off); };
    FactorSet f = FactorSet::build_from_prefix(provider, depth);
    rep.degrees.push_back(f_degree_bound(x, f));
  }
  rep.stable = std::all_of(rep.degrees.begin(), rep.degrees.end(),
                           [&](size_t d) { return d == rep.degrees[0]; });
  return rep;
}

} // namespace bifix

#endif
