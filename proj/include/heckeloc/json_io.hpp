#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "heckeloc/relations.hpp"

namespace heckeloc {

// JSON encodings of polynomials, fractions, matrices, diagrams, and reports.
// All serialization routes go through ordered containers, so output is
// byte-identical across runs and thread counts.

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (auto e : m) exps.push_back(e);
    terms.push_back(Json::array({c.to_string(), exps}));
  }
  return terms;
}

inline Json frac_to_json(const Frac& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline Poly poly_from_json(const Json& j, const Realization& r) {
  const FieldPtr& field = r.field();
  std::string gen_var;
  if (field->kind == FieldKind::Number || field->kind == FieldKind::RatFunc) gen_var = field->var;
  ScalarParser parser(field, gen_var);
  Poly p = Poly::zero(r.ring());
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("polynomial term must be [coeff, [exponents]]");
    Scalar c = term[0].is_number_integer()
                   ? Scalar::from_int(field, term[0].get<long long>())
                   : parser.parse(term[0].get<std::string>());
    Mono m(r.ring()->vars.size(), 0);
    const auto& exps = term[1];
    if (exps.size() != m.size())
      throw std::invalid_argument("exponent vector length must match the variable count");
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = exps[i].get<std::uint32_t>();
    Poly mono = Poly::constant(r.ring(), c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) mono = mono * Poly::variable(r.ring(), i).pow(m[i]);
    p = p + mono;
  }
  return p;
}

inline Frac frac_from_json(const Json& j, const Realization& r) {
  return Frac(poly_from_json(j.at("num"), r), poly_from_json(j.at("den"), r));
}

inline Json word_to_json(const CoxWord& w, const Realization& r) {
  Json a = Json::array();
  for (auto s : w) a.push_back(r.gen_names()[s]);
  return a;
}

inline CoxWord word_from_json(const Json& j, const Realization& r) {
  CoxWord w;
  for (const auto& name : j)
    w.push_back(static_cast<std::uint8_t>(r.gen_index(name.get<std::string>())));
  return w;
}

inline Json matrix_to_json(const LocMatrix& m, const Realization& r) {
  Json entries = Json::array();
  std::size_t ds = m.src()->word.size(), dt = m.tgt()->word.size();
  for (const auto& [rc, v] : m.entries()) {
    entries.push_back(Json{{"row", sub_of_index(rc.first, dt).to_string()},
                           {"col", sub_of_index(rc.second, ds).to_string()},
                           {"value", frac_to_json(v)}});
  }
  return Json{{"source_word", word_to_json(m.src()->word, r)},
              {"target_word", word_to_json(m.tgt()->word, r)},
              {"entries", entries}};
}

// --- diagrams ---

inline Json diagram_to_json(const DPtr& d, const Realization& r) {
  switch (d->kind) {
    case Diagram::Kind::Gen: {
      const Generator& g = d->gen;
      Json j{{"type", "gen"}};
      auto gname = [&](int i) { return r.gen_names()[i]; };
      switch (g.kind) {
        case GenKind::Id:
          j["gen"] = "id";
          j["word"] = word_to_json(g.word, r);
          break;
        case GenKind::PolyBox:
          j["gen"] = "polybox";
          j["value"] = frac_to_json(g.poly);
          break;
        case GenKind::DotTop: j["gen"] = "dot_top"; j["s"] = gname(g.s); break;
        case GenKind::DotBottom: j["gen"] = "dot_bottom"; j["s"] = gname(g.s); break;
        case GenKind::Merge: j["gen"] = "merge"; j["s"] = gname(g.s); break;
        case GenKind::Split: j["gen"] = "split"; j["s"] = gname(g.s); break;
        case GenKind::Cap: j["gen"] = "cap"; j["s"] = gname(g.s); break;
        case GenKind::Cup: j["gen"] = "cup"; j["s"] = gname(g.s); break;
        case GenKind::Vertex2m:
        case GenKind::EStar:
        case GenKind::JWPrime:
          j["gen"] = g.kind == GenKind::Vertex2m ? "vertex2m"
                     : g.kind == GenKind::EStar  ? "e_star"
                                                 : "jw_prime";
          j["s"] = gname(g.s);
          j["t"] = gname(g.t);
          j["shading"] = gname(g.shading);
          break;
      }
      return j;
    }
    case Diagram::Kind::VComp:
      return Json{{"type", "vcomp"},
                  {"top", diagram_to_json(d->top, r)},
                  {"bottom", diagram_to_json(d->bottom, r)}};
    case Diagram::Kind::HComp:
      return Json{{"type", "hcomp"},
                  {"parts", Json::array({diagram_to_json(d->left, r), diagram_to_json(d->right, r)})}};
    case Diagram::Kind::Scaled:
      return Json{{"type", "scaled"},
                  {"coeff", frac_to_json(d->coeff)},
                  {"inner", diagram_to_json(d->inner, r)}};
    case Diagram::Kind::Sum: {
      Json parts = Json::array();
      for (const auto& p : d->parts) parts.push_back(diagram_to_json(p, r));
      return Json{{"type", "sum"}, {"parts", parts}};
    }
  }
  throw std::logic_error("unhandled diagram node");
}

inline DPtr diagram_from_json(const Json& j, const Realization& r) {
  std::string type = j.at("type").get<std::string>();
  if (type == "gen") {
    std::string gen = j.at("gen").get<std::string>();
    if (gen == "id") return d_id(r, word_from_json(j.at("word"), r));
    if (gen == "polybox") return d_polybox(r, frac_from_json(j.at("value"), r));
    auto one_color = [&](GenKind k) {
      return d_onecolor(r, k, r.gen_index(j.at("s").get<std::string>()));
    };
    if (gen == "dot_top") return one_color(GenKind::DotTop);
    if (gen == "dot_bottom") return one_color(GenKind::DotBottom);
    if (gen == "merge") return one_color(GenKind::Merge);
    if (gen == "split") return one_color(GenKind::Split);
    if (gen == "cap") return one_color(GenKind::Cap);
    if (gen == "cup") return one_color(GenKind::Cup);
    auto pair_gen = [&](GenKind k) {
      int s = r.gen_index(j.at("s").get<std::string>());
      int t = r.gen_index(j.at("t").get<std::string>());
      int sh = j.contains("shading") ? r.gen_index(j.at("shading").get<std::string>()) : s;
      return d_pair(r, k, s, t, sh);
    };
    if (gen == "vertex2m") return pair_gen(GenKind::Vertex2m);
    if (gen == "e_star") return pair_gen(GenKind::EStar);
    if (gen == "jw_prime") return pair_gen(GenKind::JWPrime);
    throw std::invalid_argument("unknown generator: " + gen);
  }
  if (type == "vcomp")
    return d_vcomp(diagram_from_json(j.at("top"), r), diagram_from_json(j.at("bottom"), r));
  if (type == "hcomp") {
    std::vector<DPtr> parts;
    for (const auto& p : j.at("parts")) parts.push_back(diagram_from_json(p, r));
    return d_hcomp(std::move(parts));
  }
  if (type == "scaled")
    return d_scaled(frac_from_json(j.at("coeff"), r), diagram_from_json(j.at("inner"), r));
  if (type == "sum") {
    std::vector<DPtr> parts;
    for (const auto& p : j.at("parts")) parts.push_back(diagram_from_json(p, r));
    return d_sum(std::move(parts));
  }
  throw std::invalid_argument("unknown diagram node type: " + type);
}

// Deterministic report JSON (no wall-clock times).
inline Json report_to_json(const Report& rep) {
  Json cases = Json::array();
  for (const auto& c : rep.results) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["error"] = c.error;
    cases.push_back(j);
  }
  return Json{{"cases", cases}, {"all_passed", rep.all_passed()}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace heckeloc
