#ifndef BIFIX_IO_HPP
#define BIFIX_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bifix/automaton.hpp"
#include "bifix/code.hpp"
#include "bifix/factor_set.hpp"
#include "bifix/generator.hpp"
#include "bifix/measure.hpp"

namespace bifix {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const WordGenerator& g) {
  Json j;
  switch (g.kind()) {
    case WordGenerator::Kind::fixpoint: {
      j["kind"] = "fixpoint";
      Json rules = Json::object();
      for (const auto& [c, img] : g.substitution().image) rules[std::string(1, c)] = img;
      j["rules"] = rules;
      j["start"] = std::string(1, g.start_symbol());
      break;
    }
    case WordGenerator::Kind::pal:
      j["kind"] = "pal";
      j["preperiod"] = g.directive().preperiod;
      j["period"] = g.directive().period;
      break;
    case WordGenerator::Kind::evper:
      j["kind"] = "evper";
      j["preperiod"] = g.evper_preperiod();
      j["period"] = g.evper_period();
      break;
  }
  return j;
}

inline WordGenerator generator_from_json(const Json& j) {
  std::string kind = j.at("kind");
  if (kind == "fixpoint") {
    Substitution f;
    for (auto& [key, val] : j.at("rules").items()) f.image[key.at(0)] = val.get<std::string>();
    return WordGenerator::fixpoint(std::move(f), j.at("start").get<std::string>().at(0));
  }
  if (kind == "pal")
    return WordGenerator::pal(
        DirectiveWord(j.at("preperiod").get<std::string>(), j.at("period").get<std::string>()));
  if (kind == "evper")
    return WordGenerator::eventually_periodic(j.at("preperiod").get<std::string>(),
                                              j.at("period").get<std::string>());
  throw ParseError("unknown generator kind in JSON");
}

inline Json to_json(const FactorSet& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json alpha = Json::array();
  for (char c : f.alphabet().symbols()) alpha.push_back(std::string(1, c));
  j["alphabet"] = alpha;
  j["depth"] = f.depth();
  j["stabilized"] = f.stabilized();
  Json layers = Json::object();
  for (size_t l = 1; l <= f.depth(); ++l) {
    Json layer = Json::array();
    for (const Word& w : f.words_of_length(l)) layer.push_back(w);
    layers[std::to_string(l)] = layer;
  }
  j["factors"] = layers;
  return j;
}

inline Json to_json(const CodeSet& x) {
  Json j = Json::array();
  for (const Word& w : x) j.push_back(w);
  return j;
}

inline Json to_json(const Dfa& a) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["states"] = a.size();
  j["initial"] = 1;
  Json terms = Json::array();
  for (size_t p = 0; p < a.size(); ++p)
    if (a.terminal(p)) terms.push_back(p + 1);
  j["terminals"] = terms;
  Json delta = Json::array();
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t c = 0; c < a.alphabet().size(); ++c) {
      int t = a.delta()[p][c];
      if (t >= 0) delta.push_back(Json::array({p + 1, std::string(1, a.alphabet().symbol(c)), t + 1}));
    }
  j["delta"] = delta;
  return j;
}

inline Json to_json(const Scalar& s) {
  Json j;
  if (s.exact())
    j["exact"] = s.str();
  else
    j["float"] = s.value();
  return j;
}

inline Json to_json(const Distribution& d, const FactorSet& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["flavor"] = d.flavor() == Distribution::Flavor::right
                    ? "right"
                    : (d.flavor() == Distribution::Flavor::left ? "left" : "invariant");
  j["exact"] = d.exact();
  Json vals = Json::object();
  for (size_t l = 0; l <= f.depth(); ++l)
    for (const Word& w : f.words_of_length(l))
      if (d.has(w)) vals[w.empty() ? "1" : w] = to_json(d.at(w));
  j["values"] = vals;
  return j;
}

// Code files: one word per line, '#' starts a comment.
inline CodeSet read_code_file(std::istream& in) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) words.push_back(w);
  }
  return CodeSet(words);
}

inline CodeSet read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file: " + path);
  return read_code_file(in);
}

inline void write_code_file(std::ostream& out, const CodeSet& x) {
  for (const Word& w : x) out << w << "\n";
}

inline std::vector<Word> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open word file: " + path);
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) words.push_back(w);
  }
  return words;
}

} // namespace bifix

#endif
