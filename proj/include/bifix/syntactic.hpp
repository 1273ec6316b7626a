#ifndef BIFIX_SYNTACTIC_HPP
#define BIFIX_SYNTACTIC_HPP

#include <optional>
#include <vector>

#include "bifix/automaton.hpp"
#include "bifix/code.hpp"
#include "bifix/factor_set.hpp"
#include "bifix/perm_group.hpp"
#include "bifix/transition_monoid.hpp"

namespace bifix {

// F-group of an F-maximal bifix code: the permutations of Im(u) induced by
// the first right return words to a word u of F with d parses, inside the
// minimal automaton of X*. Generates the structure group of the rank-d
// D-class met by phi(F).
inline PermGroup f_group(const CodeSet& x, const FactorSet& f,
                         std::optional<Dfa> automaton = std::nullopt) {
  BifixAnalysis analysis = analyze(x, f);
  const Word& u = analysis.witness;
  Dfa a = automaton ? *automaton : minimize(literal_automaton(x, f.alphabet()));

  PartialMap pu;
  pu.map_.resize(a.size());
  for (size_t p = 0; p < a.size(); ++p) pu.map_[p] = a.run(u, int(p));
  std::vector<int> image = pu.image();
  if (image.size() != analysis.degree)
    throw Error("witness image size differs from the F-degree");

  std::map<int, size_t> pos;
  for (size_t i = 0; i < image.size(); ++i) pos[image[i]] = i;

  ReturnWords rw = f.return_words(u);
  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (const Word& y : rw.right) {
    Perm p(image.size());
    std::vector<bool> hit(image.size(), false);
    for (size_t i = 0; i < image.size(); ++i) {
      int t = a.run(y, image[i]);
      if (t < 0 || !pos.count(t))
        throw Error("return word does not permute the witness image (window or input too small)");
      p[i] = int(pos[t]);
      if (hit[p[i]]) throw Error("return word does not permute the witness image");
      hit[p[i]] = true;
    }
    gens.push_back(p);
    names.push_back(y);
  }
  std::vector<int> labels;
  for (int q : image) labels.push_back(q + 1);
  return PermGroup(labels, gens, names);
}

// Group automaton of a transitive permutation group: states are the
// points, one generator per alphabet symbol, base = first point.
inline Dfa group_automaton(const PermGroup& g, const Alphabet& alphabet) {
  if (!g.transitive()) throw PreconditionError("group code needs a transitive group");
  if (g.generators().size() != alphabet.size())
    throw PreconditionError("group code needs one generator per alphabet symbol");
  Dfa a(alphabet, g.degree());
  a.set_terminal(0);
  for (size_t p = 0; p < g.degree(); ++p)
    for (size_t c = 0; c < alphabet.size(); ++c)
      a.set_transition(p, alphabet.symbol(c), size_t(g.generators()[c][p]));
  return a.bfs_normalized();
}

// The group code as an explicit truncation: first returns to the base up
// to the requested length bound (exponential in the bound; meant for
// display and small examples).
inline std::pair<Dfa, CodeSet> group_code(const PermGroup& g, const Alphabet& alphabet,
                                          size_t code_length_bound) {
  Dfa norm = group_automaton(g, alphabet);
  return {norm, CodeSet(first_returns(norm, code_length_bound))};
}

struct RealizationResult {
  CodeSet code;
  PermGroup fgroup;
  bool equivalent = false;
  size_t degree = 0;
};

// Realization pipeline: group automaton -> Z cap F -> F-group, checked
// equivalent to the input group.
inline RealizationResult realize_syntactic_group(const PermGroup& g, const FactorSet& f) {
  Dfa dfa = group_automaton(g, f.alphabet());
  IntersectionReport ir = intersect_with_F(dfa, f);
  RealizationResult r;
  r.code = ir.code;
  r.degree = ir.degree;
  r.fgroup = f_group(r.code, f);
  r.equivalent = perm_groups_equivalent(r.fgroup, g);
  return r;
}

} // namespace bifix

#endif
