#ifndef BIFIX_TRANSITION_MONOID_HPP
#define BIFIX_TRANSITION_MONOID_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "bifix/automaton.hpp"
#include "bifix/factor_set.hpp"
#include "bifix/perm_group.hpp"

namespace bifix {

// Partial map on automaton states: map_[p] = image or -1.
struct PartialMap {
  std::vector<int> map_;

  size_t states() const { return map_.size(); }

  static PartialMap identity(size_t n) {
    PartialMap m;
    m.map_.resize(n);
    for (size_t i = 0; i < n; ++i) m.map_[i] = int(i);
    return m;
  }

  PartialMap then(const PartialMap& g) const {
    PartialMap h;
    h.map_.resize(map_.size());
    for (size_t i = 0; i < map_.size(); ++i) h.map_[i] = map_[i] < 0 ? -1 : g.map_[map_[i]];
    return h;
  }

  std::vector<int> image() const {
    std::set<int> im;
    for (int v : map_)
      if (v >= 0) im.insert(v);
    return {im.begin(), im.end()};
  }

  size_t rank() const { return image().size(); }

  // Nuclear equivalence on the domain: the partition into classes of equal
  // image point, canonically ordered by least member.
  std::vector<std::vector<int>> nuclear_classes() const {
    std::map<int, std::vector<int>> by_image;
    for (size_t i = 0; i < map_.size(); ++i)
      if (map_[i] >= 0) by_image[map_[i]].push_back(int(i));
    std::vector<std::vector<int>> out;
    for (auto& [img, cls] : by_image) out.push_back(cls);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool idempotent() const { return then(*this) == *this; }

  friend bool operator==(const PartialMap& x, const PartialMap& y) { return x.map_ == y.map_; }
  friend bool operator<(const PartialMap& x, const PartialMap& y) { return x.map_ < y.map_; }
};

// Transition monoid of a deterministic automaton with shortest witness
// words (ties broken lexicographically via BFS in shortlex order).
class TransitionMonoid {
public:
  static TransitionMonoid build(const Dfa& a, size_t cap = 200000) {
    TransitionMonoid m;
    m.alphabet_ = a.alphabet();
    size_t k = m.alphabet_.size();
    size_t n = a.size();
    m.gen_of_letter_.resize(k);

    std::map<PartialMap, size_t> index;
    auto add = [&](const PartialMap& pm, const Word& witness) {
      auto [it, fresh] = index.emplace(pm, m.elems_.size());
      if (fresh) {
        m.elems_.push_back(pm);
        m.witness_.push_back(witness);
        if (m.elems_.size() > cap) throw Error("transition monoid exceeded cap");
      }
      return it->second;
    };

    add(PartialMap::identity(n), Word());
    std::vector<PartialMap> letter(k);
    for (size_t c = 0; c < k; ++c) {
      letter[c].map_.resize(n);
      for (size_t p = 0; p < n; ++p) letter[c].map_[p] = a.delta()[p][c];
      m.gen_of_letter_[c] = add(letter[c], Word(1, m.alphabet_.symbol(c)));
    }
    // right Cayley closure in shortlex witness order
    for (size_t i = 0; i < m.elems_.size(); ++i) {
      m.right_cayley_.emplace_back(k);
      for (size_t c = 0; c < k; ++c) {
        PartialMap h = m.elems_[i].then(letter[c]);
        m.right_cayley_[i][c] = add(h, m.witness_[i] + m.alphabet_.symbol(c));
      }
    }
    m.left_cayley_.assign(m.elems_.size(), std::vector<size_t>(k));
    for (size_t i = 0; i < m.elems_.size(); ++i)
      for (size_t c = 0; c < k; ++c) {
        PartialMap h = letter[c].then(m.elems_[i]);
        m.left_cayley_[i][c] = index.at(h);
      }
    return m;
  }

  size_t size() const { return elems_.size(); }
  const PartialMap& element(size_t i) const { return elems_[i]; }
  const Word& witness(size_t i) const { return witness_[i]; }
  const Alphabet& alphabet() const { return alphabet_; }

  size_t index_of_word(const Word& w) const {
    size_t i = 0;
    for (char c : w) i = right_cayley_[i][alphabet_.index(c)];
    return i;
  }

  const std::vector<std::vector<size_t>>& right_cayley() const { return right_cayley_; }
  const std::vector<std::vector<size_t>>& left_cayley() const { return left_cayley_; }

private:
  Alphabet alphabet_;
  std::vector<PartialMap> elems_;
  std::vector<Word> witness_;
  std::vector<size_t> gen_of_letter_;
  std::vector<std::vector<size_t>> right_cayley_, left_cayley_;
};

namespace detail {

// Strongly connected components (Tarjan, iterative); returns component id
// per vertex.
inline std::vector<int> scc(const std::vector<std::vector<size_t>>& adj) {
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
      size_t vv = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
    }
  }
  return comp;
}

} // namespace detail

struct Eggbox {
  std::vector<std::vector<std::vector<size_t>>> grid; // [r][l] -> element ids
  std::vector<std::vector<bool>> is_group;
  size_t r_classes = 0, l_classes = 0;
  size_t h_class_size = 0;
  size_t group_h_classes = 0;
  PermGroup structure_group;
};

struct GreenReport {
  std::vector<int> r_class, l_class, d_class; // per element
  size_t r_count = 0, l_count = 0, d_count = 0;
  std::vector<size_t> idempotents;
  std::optional<Eggbox> designated;
};

// Green's relations via mutual reachability on the right/left Cayley
// graphs. With a factor-set restriction, locates the D-class met by the
// rank-d images of words of F and reports its eggbox and structure group.
inline GreenReport green_analysis(const TransitionMonoid& m, const FactorSet* restrict_to = nullptr,
                                  std::optional<size_t> rank = std::nullopt) {
  GreenReport rep;
  size_t n = m.size();
  std::vector<std::vector<size_t>> radj(n), ladj(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < m.right_cayley()[i].size(); ++c) {
      radj[i].push_back(m.right_cayley()[i][c]);
      ladj[i].push_back(m.left_cayley()[i][c]);
    }
  }
  rep.r_class = detail::scc(radj);
  rep.l_class = detail::scc(ladj);
  rep.r_count = size_t(*std::max_element(rep.r_class.begin(), rep.r_class.end())) + 1;
  rep.l_count = size_t(*std::max_element(rep.l_class.begin(), rep.l_class.end())) + 1;

  // D = join of R and L
  std::vector<int> uf(n);
  for (size_t i = 0; i < n; ++i) uf[i] = int(i);
  std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
  std::map<int, int> r_root, l_root;
  for (size_t i = 0; i < n; ++i) {
    auto [ir, fr] = r_root.emplace(rep.r_class[i], int(i));
    if (!fr) uf[find(int(i))] = find(ir->second);
    auto [il, fl] = l_root.emplace(rep.l_class[i], int(i));
    if (!fl) uf[find(int(i))] = find(il->second);
  }
  rep.d_class.resize(n);
  std::map<int, int> droots;
  for (size_t i = 0; i < n; ++i) {
    auto [it, fresh] = droots.emplace(find(int(i)), int(droots.size()));
    rep.d_class[i] = it->second;
  }
  rep.d_count = droots.size();

  for (size_t i = 0; i < n; ++i)
    if (m.element(i).idempotent()) rep.idempotents.push_back(i);

  if (!restrict_to && !rank) return rep;
  if (!restrict_to || !rank)
    throw PreconditionError("designating a D-class needs both the factor set and the rank");

  // Elements realized by words of F: walk the stored words through the
  // right Cayley graph.
  std::vector<bool> in_phi_f(n, false);
  {
    std::unordered_map<Word, size_t> elem_of;
    elem_of[Word()] = 0;
    in_phi_f[0] = true;
    for (size_t l = 1; l <= restrict_to->depth(); ++l)
      for (const Word& w : restrict_to->words_of_length(l)) {
        size_t parent = elem_of.at(w.substr(0, w.size() - 1));
        size_t e = m.right_cayley()[parent][m.alphabet().index(w.back())];
        elem_of[w] = e;
        in_phi_f[e] = true;
      }
  }

  int dclass = -1;
  for (size_t i = 0; i < n; ++i) {
    if (!in_phi_f[i] || m.element(i).rank() != *rank) continue;
    if (dclass < 0) dclass = rep.d_class[i];
    if (rep.d_class[i] != dclass)
      throw Error("rank-restricted elements of phi(F) meet several D-classes");
  }
  if (dclass < 0) throw PreconditionError("no element of phi(F) has the requested rank");

  Eggbox box;
  std::map<int, size_t> rs, ls;
  for (size_t i = 0; i < n; ++i) {
    if (rep.d_class[i] != dclass) continue;
    rs.emplace(rep.r_class[i], rs.size());
    ls.emplace(rep.l_class[i], ls.size());
  }
  box.r_classes = rs.size();
  box.l_classes = ls.size();
  box.grid.assign(box.r_classes, std::vector<std::vector<size_t>>(box.l_classes));
  for (size_t i = 0; i < n; ++i) {
    if (rep.d_class[i] != dclass) continue;
    box.grid[rs[rep.r_class[i]]][ls[rep.l_class[i]]].push_back(i);
  }
  box.is_group.assign(box.r_classes, std::vector<bool>(box.l_classes, false));
  std::optional<size_t> box_idem;
  for (size_t r = 0; r < box.r_classes; ++r)
    for (size_t l = 0; l < box.l_classes; ++l) {
      box.h_class_size = std::max(box.h_class_size, box.grid[r][l].size());
      for (size_t e : box.grid[r][l])
        if (m.element(e).idempotent()) {
          box.is_group[r][l] = true;
          if (!box_idem) box_idem = e;
        }
      if (box.is_group[r][l]) ++box.group_h_classes;
    }
  if (!box_idem) throw Error("designated D-class is not regular");

  // structure group: the H-class of an idempotent, restricted to its image
  const PartialMap& e = m.element(*box_idem);
  std::vector<int> image = e.image();
  std::map<int, size_t> pos;
  for (size_t i = 0; i < image.size(); ++i) pos[image[i]] = i;
  std::vector<Perm> perms;
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) {
    if (rep.r_class[i] != rep.r_class[*box_idem] || rep.l_class[i] != rep.l_class[*box_idem])
      continue;
    Perm p(image.size());
    for (size_t j = 0; j < image.size(); ++j) {
      int t = m.element(i).map_[image[j]];
      if (t < 0 || !pos.count(t)) throw Error("H-class element does not permute the image");
      p[j] = int(pos[t]);
    }
    perms.push_back(p);
    names.push_back(m.witness(i));
  }
  std::vector<int> labels;
  for (int q : image) labels.push_back(q + 1); // 1-based state ids
  box.structure_group = PermGroup(labels, perms, names);
  rep.designated = std::move(box);
  return rep;
}

// Text eggbox: one row per R-class, columns are L-classes, cells list the
// shortest witnesses, group H-classes starred.
inline std::string eggbox_text(const TransitionMonoid& m, const Eggbox& box) {
  std::ostringstream os;
  for (size_t r = 0; r < box.r_classes; ++r) {
    for (size_t l = 0; l < box.l_classes; ++l) {
      os << (box.is_group[r][l] ? "*" : " ") << "[";
      for (size_t i = 0; i < box.grid[r][l].size(); ++i) {
        if (i) os << " ";
        const Word& w = m.witness(box.grid[r][l][i]);
        os << (w.empty() ? "1" : w);
      }
      os << "] ";
    }
    os << "\n";
  }
  return os.str();
}

} // namespace bifix

#endif
