#ifndef BIFIX_AUTOMATON_HPP
#define BIFIX_AUTOMATON_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <vector>

#include "bifix/code.hpp"
#include "bifix/word.hpp"

namespace bifix {

// Deterministic automaton with partial transitions. States are 0-based
// indices internally and rendered 1-based; state 0 is initial. Ids follow
// BFS order from the initial state over the alphabet order.
class Dfa {
public:
  Dfa(Alphabet alphabet, size_t n_states)
      : alphabet_(std::move(alphabet)),
        delta_(n_states, std::vector<int>(alphabet_.size(), -1)),
        terminal_(n_states, false),
        labels_(n_states) {}

  const Alphabet& alphabet() const { return alphabet_; }
  size_t size() const { return delta_.size(); }

  void set_transition(size_t p, char a, size_t q) { delta_[p][alphabet_.index(a)] = int(q); }
  void set_terminal(size_t p, bool t = true) { terminal_[p] = t; }
  void set_label(size_t p, std::string l) { labels_[p] = std::move(l); }

  int step(int p, char a) const {
    if (p < 0) return -1;
    return delta_[p][alphabet_.index(a)];
  }

  int run(const Word& w, int from = 0) const {
    int p = from;
    for (char c : w) {
      p = step(p, c);
      if (p < 0) return -1;
    }
    return p;
  }

  bool terminal(size_t p) const { return terminal_[p]; }
  const std::string& label(size_t p) const { return labels_[p]; }
  bool accepts(const Word& w) const {
    int p = run(w);
    return p >= 0 && terminal_[p];
  }

  // Renumber states in BFS order from the initial state, visiting letters
  // in alphabet order. Unreached states are dropped.
  Dfa bfs_normalized() const {
    std::vector<int> order(size(), -1);
    std::vector<size_t> seq;
    std::queue<size_t> q;
    order[0] = 0;
    q.push(0);
    seq.push_back(0);
    while (!q.empty()) {
      size_t p = q.front();
      q.pop();
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        int t = delta_[p][a];
        if (t >= 0 && order[t] < 0) {
          order[t] = int(seq.size());
          seq.push_back(t);
          q.push(t);
        }
      }
    }
    Dfa out(alphabet_, seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
      size_t p = seq[i];
      out.terminal_[i] = terminal_[p];
      out.labels_[i] = labels_[p];
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        int t = delta_[p][a];
        if (t >= 0 && order[t] >= 0) out.delta_[i][a] = order[t];
      }
    }
    return out;
  }

  bool is_trim() const {
    size_t n = size();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::queue<size_t> q;
    fwd[0] = true;
    q.push(0);
    while (!q.empty()) {
      size_t p = q.front();
      q.pop();
      for (int t : delta_[p])
        if (t >= 0 && !fwd[t]) {
          fwd[t] = true;
          q.push(t);
        }
    }
    for (size_t p = 0; p < n; ++p)
      if (terminal_[p]) {
        bwd[p] = true;
        q.push(p);
      }
    while (!q.empty()) {
      size_t p = q.front();
      q.pop();
      for (size_t s = 0; s < n; ++s)
        if (!bwd[s])
          for (int t : delta_[s])
            if (t >= 0 && size_t(t) == p) {
              bwd[s] = true;
              q.push(s);
              break;
            }
    }
    for (size_t p = 0; p < n; ++p)
      if (!fwd[p] || !bwd[p]) return false;
    return true;
  }

  const std::vector<std::vector<int>>& delta() const { return delta_; }

private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> delta_;
  std::vector<bool> terminal_;
  std::vector<std::string> labels_;
};

// Literal automaton of X*: states are the proper prefixes of X, with
// p.a = pa if pa is a proper prefix, 1 if pa is in X, undefined otherwise.
inline Dfa literal_automaton(const CodeSet& x, const Alphabet& alphabet) {
  if (!classify_code(x).prefix) throw PreconditionError("literal automaton needs a prefix code");
  std::vector<Word> prefixes = proper_prefixes(x);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < prefixes.size(); ++i) index[prefixes[i]] = i;
  Dfa a(alphabet, std::max<size_t>(prefixes.size(), 1));
  a.set_terminal(0);
  a.set_label(0, "1");
  for (size_t i = 0; i < prefixes.size(); ++i) {
    if (!prefixes[i].empty()) a.set_label(i, prefixes[i]);
    for (char c : alphabet.symbols()) {
      Word pa = prefixes[i] + c;
      if (index.count(pa))
        a.set_transition(i, c, index[pa]);
      else if (x.contains(pa))
        a.set_transition(i, c, 0);
    }
  }
  return a.bfs_normalized();
}

inline Dfa literal_automaton(const CodeSet& x) {
  return literal_automaton(x, Alphabet::from_words(x.words()));
}

// Moore partition refinement over partial transitions; undefined targets
// form their own signature class, so no sink completion is added.
inline Dfa minimize(const Dfa& a) {
  if (!a.is_trim()) throw PreconditionError("minimization needs a trim automaton");
  size_t n = a.size(), k = a.alphabet().size();
  std::vector<int> cls(n);
  for (size_t p = 0; p < n; ++p) cls[p] = a.terminal(p) ? 0 : 1;
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<int>, int> sig_class;
    std::vector<int> next(n);
    for (size_t p = 0; p < n; ++p) {
      std::vector<int> sig;
      sig.push_back(cls[p]);
      for (size_t c = 0; c < k; ++c) {
        int t = a.delta()[p][c];
        sig.push_back(t < 0 ? -1 : cls[t]);
      }
      auto [it, fresh] = sig_class.emplace(sig, int(sig_class.size()));
      next[p] = it->second;
    }
    if (next != cls) {
      changed = true;
      cls = next;
    }
  }
  int m = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out(a.alphabet(), m);
  std::vector<bool> seen(m, false);
  // keep the shortest label among merged states
  for (size_t p = 0; p < n; ++p) {
    int c = cls[p];
    if (!seen[c] || a.label(p).size() < out.label(c).size()) out.set_label(c, a.label(p));
    seen[c] = true;
    if (a.terminal(p)) out.set_terminal(c);
    for (size_t l = 0; l < k; ++l) {
      int t = a.delta()[p][l];
      if (t >= 0) out.set_transition(c, a.alphabet().symbol(l), cls[t]);
    }
  }
  // initial class must become state 0
  if (cls[0] != 0) {
    // renumber by swapping through BFS normalization from the initial class
    Dfa shifted(a.alphabet(), m);
    std::vector<int> remap(m);
    std::iota(remap.begin(), remap.end(), 0);
    std::swap(remap[0], remap[cls[0]]);
    for (int p = 0; p < m; ++p) {
      shifted.set_label(remap[p], out.label(p));
      if (out.terminal(p)) shifted.set_terminal(remap[p]);
      for (size_t l = 0; l < k; ++l) {
        int t = out.delta()[p][l];
        if (t >= 0) shifted.set_transition(remap[p], a.alphabet().symbol(l), remap[t]);
      }
    }
    return shifted.bfs_normalized();
  }
  return out.bfs_normalized();
}

struct DfaProps {
  bool trim = false;
  bool simple = false;     // trim with terminal set = {initial}
  bool complete = false;
  bool reversible = false; // each letter acts injectively
  bool group = false;      // each letter acts as a permutation
};

inline DfaProps automaton_properties(const Dfa& a) {
  DfaProps p;
  p.trim = a.is_trim();
  size_t terminals = 0;
  for (size_t q = 0; q < a.size(); ++q) terminals += a.terminal(q);
  p.simple = p.trim && terminals == 1 && a.terminal(0);
  p.complete = true;
  p.reversible = true;
  for (size_t c = 0; c < a.alphabet().size(); ++c) {
    std::set<int> targets;
    size_t defined = 0;
    for (size_t q = 0; q < a.size(); ++q) {
      int t = a.delta()[q][c];
      if (t < 0) {
        p.complete = false;
        continue;
      }
      ++defined;
      if (!targets.insert(t).second) p.reversible = false;
    }
    (void)defined;
  }
  p.group = p.complete && p.reversible;
  return p;
}

// Bipartite graph on nonempty proper prefixes and suffixes with an edge
// (p, s) whenever ps is a code word.
struct IncidenceGraph {
  std::vector<Word> prefixes; // P'
  std::vector<Word> suffixes; // S'
  std::vector<std::pair<size_t, size_t>> edges;
  std::vector<int> prefix_component;
  std::vector<int> suffix_component;
  size_t component_count = 0;
  bool acyclic = false;

  std::vector<std::vector<Word>> prefix_traces() const {
    std::vector<std::vector<Word>> out(component_count);
    for (size_t i = 0; i < prefixes.size(); ++i)
      if (prefix_component[i] >= 0) out[prefix_component[i]].push_back(prefixes[i]);
    return out;
  }
  std::vector<std::vector<Word>> suffix_traces() const {
    std::vector<std::vector<Word>> out(component_count);
    for (size_t i = 0; i < suffixes.size(); ++i)
      if (suffix_component[i] >= 0) out[suffix_component[i]].push_back(suffixes[i]);
    return out;
  }
};

inline IncidenceGraph incidence_graph(const CodeSet& x) {
  IncidenceGraph g;
  std::set<Word, ShortlexLess> ps, ss;
  for (const Word& w : x)
    for (size_t l = 1; l < w.size(); ++l) {
      ps.insert(w.substr(0, l));
      ss.insert(w.substr(l));
    }
  g.prefixes.assign(ps.begin(), ps.end());
  g.suffixes.assign(ss.begin(), ss.end());
  std::map<Word, size_t> pi, si;
  for (size_t i = 0; i < g.prefixes.size(); ++i) pi[g.prefixes[i]] = i;
  for (size_t i = 0; i < g.suffixes.size(); ++i) si[g.suffixes[i]] = i;

  size_t np = g.prefixes.size(), ns = g.suffixes.size();
  std::vector<int> uf(np + ns);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };

  for (const Word& w : x)
    for (size_t l = 1; l < w.size(); ++l) {
      size_t p = pi[w.substr(0, l)], s = si[w.substr(l)];
      g.edges.emplace_back(p, s);
      uf[find(int(p))] = find(int(np + s));
    }

  std::map<int, int> roots;
  g.prefix_component.assign(np, -1);
  g.suffix_component.assign(ns, -1);
  for (size_t i = 0; i < np; ++i) {
    int r = find(int(i));
    if (!roots.count(r)) roots[r] = int(roots.size());
    g.prefix_component[i] = roots[r];
  }
  for (size_t i = 0; i < ns; ++i) {
    int r = find(int(np + i));
    if (!roots.count(r)) roots[r] = int(roots.size());
    g.suffix_component[i] = roots[r];
  }
  g.component_count = roots.size();
  g.acyclic = g.edges.size() + g.component_count == np + ns;
  return g;
}

// Classes of the equivalence on proper prefixes generated by the pairs
// (p, q) with ps, qs in X; the class of the empty word is first.
struct ThetaPartition {
  std::vector<std::vector<Word>> classes; // classes[0] contains the empty word
  std::map<Word, size_t> class_of;
};

inline ThetaPartition theta_classes(const CodeSet& x) {
  if (x.empty()) throw PreconditionError("theta classes need a nonempty code");
  if (!classify_code(x).bifix) throw PreconditionError("theta classes need a bifix code");
  std::vector<Word> prefixes = proper_prefixes(x);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < prefixes.size(); ++i) index[prefixes[i]] = i;
  std::vector<int> uf(prefixes.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };

  std::map<Word, std::vector<size_t>> by_suffix;
  for (const Word& w : x)
    for (size_t l = 0; l < w.size(); ++l) by_suffix[w.substr(l)].push_back(index[w.substr(0, l)]);
  for (auto& [s, group] : by_suffix)
    for (size_t i = 1; i < group.size(); ++i) uf[find(int(group[i]))] = find(int(group[0]));

  ThetaPartition t;
  std::map<int, size_t> roots;
  roots[find(int(index[Word()]))] = 0;
  t.classes.emplace_back();
  for (size_t i = 0; i < prefixes.size(); ++i) {
    int r = find(int(i));
    auto [it, fresh] = roots.emplace(r, t.classes.size());
    if (fresh) t.classes.emplace_back();
    t.classes[it->second].push_back(prefixes[i]);
    t.class_of[prefixes[i]] = it->second;
  }
  for (auto& c : t.classes) std::sort(c.begin(), c.end(), shortlex_less);
  return t;
}

// Quotient of the literal automaton by theta; transition conflicts signal
// that the code does not sit inside a Sturmian set.
inline Dfa coset_automaton(const CodeSet& x, const Alphabet& alphabet) {
  ThetaPartition t = theta_classes(x);
  std::vector<Word> prefixes = proper_prefixes(x);
  Dfa out(alphabet, t.classes.size());
  out.set_terminal(0);
  for (size_t i = 0; i < t.classes.size(); ++i) {
    Word shortest;
    bool first = true;
    for (const Word& w : t.classes[i])
      if (first || shortlex_less(w, shortest)) {
        shortest = w;
        first = false;
      }
    out.set_label(i, shortest.empty() ? "1" : shortest);
  }
  for (const Word& p : prefixes) {
    size_t from = t.class_of.at(p);
    for (char c : alphabet.symbols()) {
      Word pa = p + c;
      int target = -1;
      if (x.contains(pa))
        target = 0;
      else if (t.class_of.count(pa))
        target = int(t.class_of.at(pa));
      if (target < 0) continue;
      int existing = out.step(int(from), c);
      if (existing >= 0 && existing != target)
        throw Error("coset automaton transition conflict (non-Sturmian input)");
      if (existing < 0) out.set_transition(from, c, target);
    }
  }
  return out.bfs_normalized();
}

inline Dfa coset_automaton(const CodeSet& x) {
  return coset_automaton(x, Alphabet::from_words(x.words()));
}

// Words labeling first returns to the initial state: the generating prefix
// code of the submonoid recognized by a simple automaton, up to the length
// bound.
inline std::vector<Word> first_returns(const Dfa& a, size_t max_len) {
  std::vector<Word> out;
  std::vector<std::pair<int, Word>> frontier = {{0, Word()}};
  for (size_t l = 1; l <= max_len; ++l) {
    std::vector<std::pair<int, Word>> next;
    for (const auto& [p, w] : frontier)
      for (char c : a.alphabet().symbols()) {
        int t = a.step(p, c);
        if (t < 0) continue;
        Word wc = w + c;
        if (t == 0)
          out.push_back(wc);
        else
          next.emplace_back(t, wc);
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// Z cap F for a group code given by its (simple, complete) automaton: the
// words of F labeling first returns to the initial state. Sound because
// the result is checked to be F-maximal bifix, so nothing longer than the
// window can belong to it.
inline IntersectionReport intersect_with_F(const Dfa& a, const FactorSet& f) {
  if (!a.terminal(0)) throw PreconditionError("intersection needs a simple automaton");
  std::unordered_map<Word, int> state;
  std::unordered_map<Word, bool> returned; // some nonempty prefix reached the base
  state[Word()] = 0;
  returned[Word()] = false;
  std::vector<Word> code;
  for (size_t l = 1; l <= f.depth(); ++l)
    for (const Word& w : f.words_of_length(l)) {
      Word parent = w.substr(0, w.size() - 1);
      int p = state.count(parent) ? state.at(parent) : -1;
      int t = p < 0 ? -1 : a.step(p, w.back());
      state[w] = t;
      bool ret = returned.at(parent);
      if (t == 0 && !ret) code.push_back(w);
      returned[w] = ret || t == 0;
    }
  IntersectionReport r;
  r.code = CodeSet(code);
  if (!classify_code(r.code).bifix || !is_F_maximal(r.code, f, CodeKind::bifix).maximal)
    throw WindowError("window too small to certify the automaton intersection");
  r.degree = f_degree(r.code, f);
  return r;
}

inline std::string to_dot(const Dfa& a, const std::string& name = "dfa") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (size_t p = 0; p < a.size(); ++p) {
    os << "  " << (p + 1) << " [shape=" << (a.terminal(p) ? "doublecircle" : "circle");
    if (!a.label(p).empty()) os << ", xlabel=\"" << a.label(p) << "\"";
    os << "];\n";
  }
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t c = 0; c < a.alphabet().size(); ++c) {
      int t = a.delta()[p][c];
      if (t >= 0)
        os << "  " << (p + 1) << " -> " << (t + 1) << " [label=\"" << a.alphabet().symbol(c)
           << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const IncidenceGraph& g, const std::string& name = "incidence") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (size_t i = 0; i < g.prefixes.size(); ++i)
    os << "  p" << i << " [label=\"" << g.prefixes[i]
       << "\", color=" << (g.prefix_component[i] % 9 + 1) << ", colorscheme=set19];\n";
  for (size_t i = 0; i < g.suffixes.size(); ++i)
    os << "  s" << i << " [label=\"" << g.suffixes[i]
       << "\", color=" << (g.suffix_component[i] % 9 + 1) << ", colorscheme=set19];\n";
  for (auto [p, s] : g.edges) os << "  p" << p << " -- s" << s << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace bifix

#endif
