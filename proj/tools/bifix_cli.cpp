// Command-line front end: factor windows, measures, the bifix-code
// calculus, automata, free-group folds, syntactic groups, periodicity and
// the verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bifix/free_group.hpp"
#include "bifix/io.hpp"
#include "bifix/periodicity.hpp"
#include "bifix/syntactic.hpp"
#include "bifix/verify.hpp"

using namespace bifix;

namespace {

struct CommonOpts {
  std::string gen_spec;
  size_t depth = 0;      // 0 = auto
  size_t max_depth = 256;
  bool json = false;
  bool dot = false;
  std::string config;
};

void load_config(CommonOpts& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw ParseError("cannot open config file: " + o.config);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    key = trim(key);
    val = trim(val);
    if (key == "depth" && o.depth == 0) o.depth = std::stoul(val);
    if (key == "max_depth") o.max_depth = std::stoul(val);
  }
}

// Windows default to 4x the longest relevant word and grow by doubling up
// to the cap; growth is reported on stderr.
FactorSet build_window(const CommonOpts& o, size_t needed_length,
                       const std::function<void(const FactorSet&)>& probe = {}) {
  WordGenerator gen = WordGenerator::parse(o.gen_spec);
  size_t depth = o.depth ? o.depth : std::max<size_t>(4 * needed_length, 16);
  while (true) {
    FactorSet f = FactorSet::build(gen, depth);
    if (!probe) return f;
    try {
      probe(f);
      return f;
    } catch (const WindowError&) {
      if (depth * 2 > o.max_depth) throw;
      depth *= 2;
      std::cerr << "note: growing factor window to depth " << depth << "\n";
    }
  }
}

void emit(const Json& j, bool json_mode, const std::string& plain) {
  if (json_mode)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain;
}

std::string words_line(const std::vector<Word>& ws) {
  std::string s;
  for (const Word& w : ws) {
    if (!s.empty()) s += " ";
    s += w.empty() ? "1" : w;
  }
  return s;
}

std::string words_line(const CodeSet& x) { return words_line(x.words()); }

int run(int argc, char** argv) {
  CLI::App app{"bifix codes in episturmian factor sets"};
  app.require_subcommand(1);
  CommonOpts o;
  app.add_option("--config", o.config, "key=value defaults (depth, max_depth)");

  // factors ----------------------------------------------------------------
  auto* factors = app.add_subcommand("factors", "materialize a factor window");
  factors->add_option("--gen", o.gen_spec, "generator spec")->required();
  factors->add_option("--depth", o.depth, "window depth");
  factors->add_flag("--json", o.json, "JSON output");

  // measure ----------------------------------------------------------------
  auto* measure = app.add_subcommand("measure", "invariant/right distributions");
  std::string measure_code, measure_kind = "invariant";
  measure->add_option("--gen", o.gen_spec, "generator spec")->required();
  measure->add_option("--depth", o.depth, "window depth");
  measure->add_option("--kind", measure_kind, "invariant | uniform-right");
  measure->add_option("--code", measure_code, "code file: also report pi(X), lambda(X)");
  measure->add_flag("--json", o.json, "JSON output");

  // code -------------------------------------------------------------------
  auto* code = app.add_subcommand("code", "bifix code calculus");
  code->require_subcommand(1);
  std::string code_file, kernel_file, word_arg;
  size_t degree_arg = 0;
  for (const char* name : {"analyze", "derive", "from-kernel", "enumerate", "transform",
                           "complete", "intersect"}) {
    auto* sub = code->add_subcommand(name);
    sub->add_option("--gen", o.gen_spec, "generator spec")->required();
    sub->add_option("--depth", o.depth, "window depth");
    sub->add_option("--max-depth", o.max_depth, "window growth cap");
    sub->add_flag("--json", o.json, "JSON output");
    if (std::string(name) != "enumerate" && std::string(name) != "from-kernel")
      sub->add_option("--code", code_file, "code file");
    if (std::string(name) == "from-kernel") sub->add_option("--kernel", kernel_file, "kernel file");
    if (std::string(name) == "from-kernel" || std::string(name) == "enumerate" ||
        std::string(name) == "complete")
      sub->add_option("--degree", degree_arg, "F-degree");
    if (std::string(name) == "transform") sub->add_option("--word", word_arg, "pivot word")->required();
  }

  // automaton ----------------------------------------------------------------
  auto* automaton = app.add_subcommand("automaton", "literal/minimal/coset automata");
  automaton->require_subcommand(1);
  for (const char* name : {"literal", "minimize", "coset", "incidence"}) {
    auto* sub = automaton->add_subcommand(name);
    sub->add_option("--code", code_file, "code file")->required();
    sub->add_option("--gen", o.gen_spec, "generator spec (fixes the alphabet)");
    sub->add_flag("--dot", o.dot, "DOT output");
    sub->add_flag("--json", o.json, "JSON output");
  }

  // group --------------------------------------------------------------------
  auto* group = app.add_subcommand("group", "free-group machinery");
  group->require_subcommand(1);
  std::string member_word;
  std::vector<size_t> hall_args;
  for (const char* name : {"fold", "stats", "member"}) {
    auto* sub = group->add_subcommand(name);
    sub->add_option("--code", code_file, "generator file")->required();
    sub->add_flag("--dot", o.dot, "DOT output");
    sub->add_flag("--json", o.json, "JSON output");
    if (std::string(name) == "member")
      sub->add_option("--word", member_word, "group word, apostrophe inverts")->required();
  }
  auto* hall = group->add_subcommand("hall");
  hall->add_option("args", hall_args, "d k")->expected(2);

  // syntactic ------------------------------------------------------------------
  auto* syntactic = app.add_subcommand("syntactic", "transition monoids and F-groups");
  syntactic->require_subcommand(1);
  for (const char* name : {"monoid", "green", "fgroup"}) {
    auto* sub = syntactic->add_subcommand(name);
    sub->add_option("--code", code_file, "code file")->required();
    sub->add_option("--gen", o.gen_spec, "generator spec")->required();
    sub->add_option("--depth", o.depth, "window depth");
    sub->add_flag("--json", o.json, "JSON output");
  }
  std::vector<std::string> group_cycles;
  size_t group_degree = 0;
  auto* realize = syntactic->add_subcommand("realize");
  realize->add_option("--perm", group_cycles, "generator in cycle notation, e.g. \"(1 2)(3 4)\"")
      ->required();
  realize->add_option("--degree", group_degree, "number of points")->required();
  realize->add_option("--gen", o.gen_spec, "generator spec")->required();
  realize->add_option("--depth", o.depth, "window depth");
  realize->add_option("--max-depth", o.max_depth, "window growth cap");
  realize->add_flag("--json", o.json, "JSON output");

  // period -----------------------------------------------------------------
  auto* period = app.add_subcommand("period", "periods and forced periodicity");
  period->require_subcommand(1);
  std::string forbidden_file, alphabet_arg = "ab";
  for (const char* name : {"least", "rep", "cft"}) {
    auto* sub = period->add_subcommand(name);
    sub->add_option("--word", word_arg, "word (for rep: prefix,suffix)")->required();
  }
  auto* forced = period->add_subcommand("forced");
  forced->add_option("--forbidden", forbidden_file, "forbidden factor file")->required();
  forced->add_option("--alphabet", alphabet_arg, "alphabet symbols");
  forced->add_flag("--dot", o.dot, "DOT output");
  forced->add_flag("--json", o.json, "JSON output");

  // count / verify ------------------------------------------------------------
  auto* count = app.add_subcommand("count", "counting formulas");
  count->add_option("--hall", hall_args, "d k")->expected(2);
  auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
  verify->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
  }
  load_config(o);

  if (factors->parsed()) {
    FactorSet f = build_window(o, 4);
    Json j = to_json(f);
    std::string plain;
    for (size_t l = 1; l <= f.depth(); ++l)
      plain += std::to_string(l) + ": " + words_line(f.words_of_length(l)) + "\n";
    emit(j, o.json, plain);
    return 0;
  }

  if (measure->parsed()) {
    std::optional<CodeSet> x;
    if (!measure_code.empty()) x = read_code_file(measure_code);
    size_t need = x ? x->max_length() + 1 : 4;
    FactorSet f = build_window(o, need);
    Distribution d = measure_kind == "uniform-right" ? uniform_right_distribution(f)
                                                     : invariant_distribution(f);
    Json j = to_json(d, f);
    std::string plain;
    for (size_t l = 0; l <= std::min<size_t>(f.depth(), 6); ++l)
      for (const Word& w : f.words_of_length(l))
        plain += (w.empty() ? "1" : w) + " -> " + d.at(w).str() + "\n";
    if (x) {
      Scalar px = set_probability(d, *x);
      j["pi_X"] = to_json(px);
      plain += "pi(X) = " + px.str() + "\n";
      if (px.equals(Scalar(Rat(1)))) {
        Scalar lx = average_length(d, *x);
        j["average_length"] = to_json(lx);
        plain += "lambda(X) = " + lx.str() + "\n";
      }
    }
    emit(j, o.json, plain);
    return 0;
  }

  if (code->parsed()) {
    auto* sub = code->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "enumerate") {
      if (degree_arg == 0) throw PreconditionError("enumerate needs --degree");
      std::vector<CodeSet> out;
      FactorSet f = build_window(o, 4 * degree_arg, [&](const FactorSet& f) {
        out = enumerate_F_maximal_bifix(f, degree_arg);
      });
      Json j = Json::array();
      std::string plain;
      for (const CodeSet& c : out) {
        j.push_back(to_json(c));
        plain += words_line(c) + "\n";
      }
      Json wrap;
      wrap["schema_version"] = kSchemaVersion;
      wrap["degree"] = degree_arg;
      wrap["count"] = out.size();
      wrap["codes"] = j;
      emit(wrap, o.json, plain);
      return 0;
    }
    if (name == "from-kernel") {
      if (degree_arg == 0) throw PreconditionError("from-kernel needs --degree");
      CodeSet kernel = kernel_file.empty() ? CodeSet{} : read_code_file(kernel_file);
      CodeSet out;
      FactorSet f = build_window(o, 4 * degree_arg, [&](const FactorSet& f) {
        out = code_from_kernel(kernel, f, degree_arg);
      });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(out);
      emit(j, o.json, words_line(out) + "\n");
      return 0;
    }
    CodeSet x = read_code_file(code_file);
    if (name == "analyze") {
      BifixAnalysis a;
      FactorSet f =
          build_window(o, x.max_length() + 1, [&](const FactorSet& f) { a = analyze(x, f); });
      CodeSet derived = a.degree >= 2 ? derived_code(x, f) : x;
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["degree"] = a.degree;
      j["kernel"] = to_json(a.kernel);
      j["derived"] = a.degree >= 2 ? to_json(derived) : Json(nullptr);
      j["prefixes"] = a.proper_prefixes;
      j["suffixes"] = a.proper_suffixes;
      j["cardinality"] = x.size();
      std::string plain = "degree: " + std::to_string(a.degree) + "\nkernel: " +
                          words_line(a.kernel) + "\n";
      if (a.degree >= 2) plain += "derived: " + words_line(derived) + "\n";
      emit(j, o.json, plain);
      return 0;
    }
    if (name == "derive") {
      CodeSet out;
      FactorSet f =
          build_window(o, x.max_length() + 1, [&](const FactorSet& f) { out = derived_code(x, f); });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(out);
      emit(j, o.json, words_line(out) + "\n");
      return 0;
    }
    if (name == "transform") {
      CodeSet out;
      FactorSet f = build_window(o, x.max_length() + word_arg.size() + 1, [&](const FactorSet& f) {
        out = internal_transformation(x, f, word_arg);
      });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(out);
      emit(j, o.json, words_line(out) + "\n");
      return 0;
    }
    if (name == "complete") {
      CompletionResult r;
      FactorSet f = build_window(o, 4 * (x.max_length() + 1), [&](const FactorSet& f) {
        r = complete_bifix(x, f, degree_arg ? std::optional<size_t>(degree_arg) : std::nullopt);
      });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(r.code);
      j["degree"] = r.degree;
      j["already_maximal"] = r.already_maximal;
      emit(j, o.json,
           words_line(r.code) + (r.already_maximal ? "  # already F-maximal" : "") + "\n");
      return 0;
    }
    if (name == "intersect") {
      IntersectionReport r;
      FactorSet f = build_window(o, x.max_length() + 1,
                                 [&](const FactorSet& f) { r = intersect_with_F(x, f); });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(r.code);
      j["degree"] = r.degree;
      emit(j, o.json, words_line(r.code) + "\ndegree: " + std::to_string(r.degree) + "\n");
      return 0;
    }
  }

  if (automaton->parsed()) {
    auto* sub = automaton->get_subcommands().front();
    const std::string name = sub->get_name();
    CodeSet x = read_code_file(code_file);
    Alphabet alphabet = o.gen_spec.empty() ? Alphabet::from_words(x.words())
                                           : WordGenerator::parse(o.gen_spec).alphabet();
    if (name == "incidence") {
      IncidenceGraph g = incidence_graph(x);
      if (o.dot) {
        std::cout << to_dot(g);
        return 0;
      }
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["components"] = g.component_count;
      j["acyclic"] = g.acyclic;
      j["prefix_traces"] = g.prefix_traces();
      j["suffix_traces"] = g.suffix_traces();
      std::string plain = "components: " + std::to_string(g.component_count) +
                          (g.acyclic ? " (acyclic)\n" : " (has a cycle)\n");
      for (const auto& tr : g.prefix_traces()) plain += "prefix trace: " + words_line(tr) + "\n";
      emit(j, o.json, plain);
      return 0;
    }
    Dfa a = name == "literal"    ? literal_automaton(x, alphabet)
            : name == "minimize" ? minimize(literal_automaton(x, alphabet))
                                 : coset_automaton(x, alphabet);
    if (o.dot) {
      std::cout << to_dot(a, name);
      return 0;
    }
    auto props = automaton_properties(a);
    Json j = to_json(a);
    j["properties"] = {{"trim", props.trim},
                       {"simple", props.simple},
                       {"complete", props.complete},
                       {"reversible", props.reversible},
                       {"group", props.group}};
    std::string plain = std::to_string(a.size()) + " states; group automaton: " +
                        (props.group ? "yes" : "no") + "\n";
    emit(j, o.json, plain);
    return 0;
  }

  if (group->parsed()) {
    auto* sub = group->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "hall") {
      std::cout << hall_count(hall_args[0], hall_args[1]) << "\n";
      return 0;
    }
    CodeSet x = read_code_file(code_file);
    StallingsGraph g = stallings(x);
    if (name == "fold") {
      if (o.dot)
        std::cout << g.to_dot();
      else
        std::cout << g.size() << " vertices, " << g.edges() << " edges\n";
      return 0;
    }
    if (name == "stats") {
      auto s = g.stats();
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["vertices"] = s.vertices;
      j["edges"] = s.edges;
      j["rank"] = s.rank;
      j["complete"] = s.complete;
      if (s.index)
        j["index"] = *s.index;
      else
        j["index"] = "infinite";
      j["basis"] = s.rank == x.size();
      std::string plain = "rank " + std::to_string(s.rank) + ", index " +
                          (s.index ? std::to_string(*s.index) : std::string("infinite")) +
                          ", basis: " + (s.rank == x.size() ? "yes" : "no") + "\n";
      emit(j, o.json, plain);
      return 0;
    }
    if (name == "member") {
      GroupWord w = parse_group_word(member_word, g.alphabet());
      std::cout << (g.member(w) ? "yes" : "no") << "\n";
      return 0;
    }
  }

  if (syntactic->parsed()) {
    auto* sub = syntactic->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "realize") {
      std::vector<Perm> gens;
      for (const std::string& c : group_cycles) gens.push_back(parse_cycles(c, group_degree));
      std::vector<int> labels;
      for (size_t i = 0; i < group_degree; ++i) labels.push_back(int(i) + 1);
      PermGroup g(labels, gens);
      RealizationResult r;
      FactorSet f = build_window(o, 4 * group_degree,
                                 [&](const FactorSet& ff) { r = realize_syntactic_group(g, ff); });
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["code"] = to_json(r.code);
      j["degree"] = r.degree;
      j["fgroup_order"] = r.fgroup.order();
      j["equivalent"] = r.equivalent;
      std::string plain = words_line(r.code) + "\ndegree: " + std::to_string(r.degree) +
                          ", F-group order " + std::to_string(r.fgroup.order()) +
                          ", equivalent: " + (r.equivalent ? "yes" : "no") + "\n";
      emit(j, o.json, plain);
      return 0;
    }
    CodeSet x = read_code_file(code_file);
    FactorSet f = build_window(o, x.max_length() + 1);
    Dfa a = minimize(literal_automaton(x, f.alphabet()));
    if (name == "monoid") {
      TransitionMonoid m = TransitionMonoid::build(a);
      std::cout << m.size() << " elements over " << a.size() << " states\n";
      return 0;
    }
    if (name == "green") {
      size_t d = 0;
      FactorSet f2 = build_window(o, x.max_length() + 1,
                                  [&](const FactorSet& ff) { d = f_degree(x, ff); });
      TransitionMonoid m = TransitionMonoid::build(a);
      GreenReport rep = green_analysis(m, &f2, d);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["r_classes"] = rep.r_count;
      j["l_classes"] = rep.l_count;
      j["d_classes"] = rep.d_count;
      std::string plain = "R-classes " + std::to_string(rep.r_count) + ", L-classes " +
                          std::to_string(rep.l_count) + ", D-classes " +
                          std::to_string(rep.d_count) + "\n";
      if (rep.designated) {
        const Eggbox& box = *rep.designated;
        Json grid = Json::array();
        for (size_t r = 0; r < box.r_classes; ++r) {
          Json row = Json::array();
          for (size_t l = 0; l < box.l_classes; ++l) {
            Json cell;
            Json ws = Json::array();
            for (size_t e : box.grid[r][l]) {
              const Word& w = m.witness(e);
              ws.push_back(w.empty() ? "1" : w);
            }
            cell["witnesses"] = ws;
            cell["group"] = static_cast<bool>(box.is_group[r][l]);
            row.push_back(cell);
          }
          grid.push_back(row);
        }
        j["eggbox"] = grid;
        j["group_h_classes"] = box.group_h_classes;
        j["structure_group_order"] = box.structure_group.order();
        plain += "rank-" + std::to_string(d) + " D-class eggbox (" +
                 std::to_string(box.r_classes) + "x" + std::to_string(box.l_classes) + ", " +
                 std::to_string(box.group_h_classes) + " group H-classes):\n" +
                 eggbox_text(m, box) + "structure group order: " +
                 std::to_string(box.structure_group.order()) + "\n";
      }
      emit(j, o.json, plain);
      return 0;
    }
    if (name == "fgroup") {
      PermGroup g;
      FactorSet f2 = build_window(o, x.max_length() + 1,
                                  [&](const FactorSet& ff) { g = f_group(x, ff); });
      std::cout << "F-group on " << g.degree() << " points, order " << g.order() << "\n";
      for (size_t i = 0; i < g.generators().size(); ++i)
        std::cout << "  " << g.generator_names()[i] << " -> "
                  << cycles_string(g.generators()[i], g.labels()) << "\n";
      return 0;
    }
  }

  if (period->parsed()) {
    auto* sub = period->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "least") {
      std::cout << least_period(word_arg) << "\n";
      return 0;
    }
    if (name == "rep") {
      auto comma = word_arg.find(',');
      if (comma == std::string::npos) throw ParseError("rep needs --word prefix,suffix");
      std::cout << repetition(word_arg.substr(0, comma), word_arg.substr(comma + 1)) << "\n";
      return 0;
    }
    if (name == "cft") {
      std::cout << cft_least_period(word_arg) << "\n";
      return 0;
    }
    if (name == "forced") {
      auto forbidden = read_word_list(forbidden_file);
      auto rep = forced_periodicity(Alphabet(alphabet_arg), forbidden);
      if (o.dot) {
        std::cout << rep.graph.to_dot(rep.scc_of);
        return 0;
      }
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["nonempty"] = rep.nonempty;
      j["all_ultimately_periodic"] = rep.all_ultimately_periodic;
      j["cycles"] = rep.cycles;
      std::string plain = std::string("nonempty: ") + (rep.nonempty ? "yes" : "no") +
                          "\nall ultimately periodic: " +
                          (rep.all_ultimately_periodic ? "yes" : "no") + "\ncycles: " +
                          words_line(rep.cycles) + "\n";
      emit(j, o.json, plain);
      return 0;
    }
  }

  if (count->parsed()) {
    if (hall_args.size() == 2) {
      std::cout << hall_count(hall_args[0], hall_args[1]) << "\n";
      return 0;
    }
    throw PreconditionError("count needs --hall d k");
  }

  if (verify->parsed()) {
    auto results = run_acceptance();
    bool ok = true;
    Json j = Json::array();
    for (const auto& r : results) {
      if (o.json) {
        j.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"blocking", r.blocking},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
      } else {
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
      }
      if (!r.pass && r.blocking) ok = false;
    }
    if (o.json) std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
