#ifndef BIFIX_PERM_GROUP_HPP
#define BIFIX_PERM_GROUP_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bifix/errors.hpp"

namespace bifix {

using Perm = std::vector<int>; // perm[i] = image of point i (0-based indices)

inline Perm perm_compose(const Perm& f, const Perm& g) { // f then g
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

inline Perm perm_identity(size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_inverse(const Perm& f) {
  Perm g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[f[i]] = int(i);
  return g;
}

inline size_t perm_order(const Perm& f) {
  Perm p = f;
  Perm id = perm_identity(f.size());
  size_t n = 1;
  while (p != id) {
    p = perm_compose(p, f);
    ++n;
    if (n > 1u << 20) throw Error("permutation order runaway");
  }
  return n;
}

// Cycle notation on external point labels, fixed points omitted; the
// identity prints as "()".
inline std::string cycles_string(const Perm& f, const std::vector<int>& labels) {
  std::ostringstream os;
  std::vector<bool> seen(f.size(), false);
  bool any = false;
  for (size_t i = 0; i < f.size(); ++i) {
    if (seen[i] || f[i] == int(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    do {
      if (!first) os << " ";
      first = false;
      os << labels[j];
      seen[j] = true;
      j = size_t(f[j]);
    } while (j != i);
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

// Permutation group given by generators acting on a labeled finite point
// set.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::vector<int> point_labels, std::vector<Perm> gens,
            std::vector<std::string> gen_names = {})
      : labels_(std::move(point_labels)), gens_(std::move(gens)), names_(std::move(gen_names)) {
    for (const Perm& g : gens_) {
      if (g.size() != labels_.size()) throw PreconditionError("generator degree mismatch");
      std::vector<bool> hit(g.size(), false);
      for (int v : g) {
        if (v < 0 || size_t(v) >= g.size() || hit[v])
          throw PreconditionError("generator is not a permutation");
        hit[v] = true;
      }
    }
    if (names_.empty()) names_.resize(gens_.size());
  }

  size_t degree() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  const std::vector<Perm>& elements(size_t cap = 200000) const {
    if (elements_.empty()) {
      std::set<Perm> seen;
      std::vector<Perm> queue = {perm_identity(degree())};
      seen.insert(queue[0]);
      for (size_t i = 0; i < queue.size(); ++i) {
        for (const Perm& g : gens_) {
          Perm h = perm_compose(queue[i], g);
          if (seen.insert(h).second) {
            queue.push_back(h);
            if (queue.size() > cap) throw Error("group expansion exceeded cap");
          }
        }
      }
      elements_ = std::move(queue);
      std::sort(elements_.begin(), elements_.end());
    }
    return elements_;
  }

  size_t order() const { return elements().size(); }

  bool transitive() const {
    std::vector<bool> seen(degree(), false);
    std::vector<size_t> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      size_t p = stack.back();
      stack.pop_back();
      for (const Perm& g : gens_) {
        size_t q = size_t(g[p]);
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  size_t exponent() const {
    size_t e = 1;
    for (const Perm& g : elements()) e = std::lcm(e, perm_order(g));
    return e;
  }

  std::multiset<size_t> element_orders() const {
    std::multiset<size_t> out;
    for (const Perm& g : elements()) out.insert(perm_order(g));
    return out;
  }

private:
  std::vector<int> labels_;
  std::vector<Perm> gens_;
  std::vector<std::string> names_;
  mutable std::vector<Perm> elements_;
};

// Parses cycle notation like "(1 2)(3 4)" into a permutation of
// {0..degree-1}; points in the input are 1-based.
inline Perm parse_cycles(const std::string& s, size_t degree) {
  Perm p(degree);
  for (size_t i = 0; i < degree; ++i) p[i] = int(i);
  size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError("cycle notation must look like (1 2)(3 4)");
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced cycle parenthesis");
    std::vector<int> cycle;
    size_t i = pos + 1;
    while (i < close) {
      while (i < close && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= close) break;
      size_t j = i;
      while (j < close && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      int v = std::stoi(s.substr(i, j - i)) - 1;
      if (v < 0 || size_t(v) >= degree) throw ParseError("cycle point out of range");
      cycle.push_back(v);
      i = j;
    }
    for (size_t c = 0; c + 1 < cycle.size(); ++c) p[cycle[c]] = cycle[c + 1];
    if (cycle.size() > 1) p[cycle.back()] = cycle.front();
    pos = close + 1;
  }
  return p;
}

namespace detail {

inline bool conjugation_feasible(const Perm& g, const std::vector<int>& beta,
                                 const std::vector<Perm>& h_elems) {
  // beta[i] == -1 for unassigned points; require some h with
  // h[beta[i]] == beta[g[i]] wherever both ends are assigned.
  for (const Perm& h : h_elems) {
    bool ok = true;
    for (size_t i = 0; i < g.size() && ok; ++i) {
      if (beta[i] < 0 || beta[g[i]] < 0) continue;
      if (h[beta[i]] != beta[g[i]]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

inline bool extend_beta(std::vector<int>& beta, std::vector<bool>& used, size_t next,
                        const std::vector<Perm>& g_elems, const std::vector<Perm>& h_elems) {
  size_t n = beta.size();
  if (next == n) {
    // full check: conjugates of G must exactly form H
    std::set<Perm> hs(h_elems.begin(), h_elems.end());
    std::set<Perm> conj;
    for (const Perm& g : g_elems) {
      Perm c(n);
      for (size_t i = 0; i < n; ++i) c[beta[i]] = beta[g[i]];
      conj.insert(c);
    }
    return conj == hs;
  }
  for (size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    beta[next] = int(img);
    used[img] = true;
    bool ok = true;
    for (const Perm& g : g_elems)
      if (!conjugation_feasible(g, beta, h_elems)) {
        ok = false;
        break;
      }
    if (ok && extend_beta(beta, used, next + 1, g_elems, h_elems)) return true;
    beta[next] = -1;
    used[img] = false;
  }
  return false;
}

} // namespace detail

// Permutation-group equivalence: a point bijection beta and a group
// isomorphism making the actions commute; decided by backtracking over
// beta after invariant prefiltering.
inline bool perm_groups_equivalent(const PermGroup& g, const PermGroup& h, size_t degree_cap = 12) {
  if (g.degree() != h.degree()) return false;
  if (g.degree() > degree_cap) throw PreconditionError("equivalence search degree cap exceeded");
  if (g.order() != h.order()) return false;
  if (g.element_orders() != h.element_orders()) return false;
  std::vector<int> beta(g.degree(), -1);
  std::vector<bool> used(g.degree(), false);
  return detail::extend_beta(beta, used, 0, g.elements(), h.elements());
}

} // namespace bifix

#endif
