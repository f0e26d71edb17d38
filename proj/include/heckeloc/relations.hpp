#pragma once

#include <chrono>
#include <functional>
#include <atomic>
#include <future>
#include <thread>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heckeloc/diagram.hpp"

namespace heckeloc {

// Relation suites: both sides of every defining relation of the category are
// built as diagrams, evaluated under Lambda, and compared exactly. A case
// fails loudly with the differing entries.

struct RelationCase {
  std::string name;
  RealizationPtr real;
  std::vector<std::string> tags;
  // Returns an error description on failure, nullopt on success.
  std::function<std::optional<std::string>(LambdaEval&)> run;
};

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string error;
  double millis = 0;
};

struct Report {
  std::vector<CaseResult> results;  // ordered by case name

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }

  std::string render() const {
    std::ostringstream out;
    int npass = 0;
    for (const auto& r : results) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
      out << "  (" << static_cast<long long>(r.millis) << " ms)";
      if (!r.passed) out << "\n       " << r.error;
      out << "\n";
      npass += r.passed;
    }
    out << npass << "/" << results.size() << " relation cases passed\n";
    return out.str();
  }
};

inline std::string describe_diff(const LocMatrix& a, const LocMatrix& b, std::size_t limit = 4) {
  std::ostringstream out;
  std::size_t shown = 0;
  std::size_t d = a.src()->word.size(), dt = a.tgt()->word.size();
  auto show = [&](std::uint32_t row, std::uint32_t col) {
    if (shown >= limit) return;
    out << " [row " << sub_of_index(row, dt).to_string() << " col "
        << sub_of_index(col, d).to_string() << ": " << a.at(row, col).to_string()
        << " vs " << b.at(row, col).to_string() << "]";
    ++shown;
  };
  for (const auto& [rc, v] : a.entries())
    if (v != b.at(rc.first, rc.second)) show(rc.first, rc.second);
  for (const auto& [rc, v] : b.entries())
    if (a.entries().find(rc) == a.entries().end() && !v.is_zero()) show(rc.first, rc.second);
  return out.str();
}

// lhs == rhs (or == 0 when rhs is null), plus the graded-degree invariant on
// every evaluated matrix whose diagram has a well-defined degree.
inline RelationCase make_equal_case(std::string name, RealizationPtr real, DPtr lhs, DPtr rhs,
                                    std::vector<std::string> tags) {
  RelationCase c;
  c.name = std::move(name);
  c.real = std::move(real);
  c.tags = std::move(tags);
  c.run = [lhs, rhs](LambdaEval& ev) -> std::optional<std::string> {
    LocMatrix a = ev.eval(lhs);
    if (lhs->degree && !a.degree_check(*lhs->degree))
      return "left side fails the graded-degree invariant";
    if (!rhs) {
      if (!a.is_zero()) return "expected the zero matrix, found nonzero entries";
      return std::nullopt;
    }
    LocMatrix b = ev.eval(rhs);
    if (rhs->degree && !b.degree_check(*rhs->degree))
      return "right side fails the graded-degree invariant";
    if (a != b) return "matrices differ:" + describe_diff(a, b);
    return std::nullopt;
  };
  return c;
}

inline Report verify(const std::vector<RelationCase>& cases, int threads = 0) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      const RelationCase& c = cases[i];
      CaseResult res;
      res.name = c.name;
      auto start = std::chrono::steady_clock::now();
      try {
        LambdaEval ev(c.real);
        auto err = c.run(ev);
        res.passed = !err.has_value();
        if (err) res.error = *err;
      } catch (const std::exception& ex) {
        res.passed = false;
        res.error = std::string("evaluation error: ") + ex.what();
      }
      res.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(res);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  Report rep;
  rep.results = std::move(results);
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return rep;
}

// --- one-color relations ---
// The full list of standard one-color relations of the presentation, each
// mapped to a named case: frobenius units/counits (four corners), frobenius
// associativity (both readings), the needle, the barbell, and polynomial
// forcing. The barbell, unit, and needle matrix products are the displayed
// sample computations.

inline std::vector<RelationCase> build_one_color_suite(const RealizationPtr& r, int s) {
  const Realization& R = *r;
  std::string g = R.gen_names()[s];
  std::string p = R.name() + "/" + g + "/";
  std::vector<std::string> tags{"one-color"};
  std::vector<RelationCase> out;
  auto id1 = d_id(R, {static_cast<std::uint8_t>(s)});
  auto dot_t = d_onecolor(R, GenKind::DotTop, s);
  auto dot_b = d_onecolor(R, GenKind::DotBottom, s);
  auto merge = d_onecolor(R, GenKind::Merge, s);
  auto split = d_onecolor(R, GenKind::Split, s);
  Poly alpha = Poly::variable(R.ring(), s);

  out.push_back(make_equal_case(p + "barbell", r,
      d_vcomp(dot_t, dot_b), d_polybox(R, Frac(alpha)), tags));
  out.push_back(make_equal_case(p + "frobenius-unit-right", r,
      d_vcomp(d_hcomp(id1, dot_t), split), id1, tags));
  out.push_back(make_equal_case(p + "frobenius-unit-left", r,
      d_vcomp(d_hcomp(dot_t, id1), split), id1, tags));
  out.push_back(make_equal_case(p + "frobenius-counit-right", r,
      d_vcomp(merge, d_hcomp(id1, dot_b)), id1, tags));
  out.push_back(make_equal_case(p + "frobenius-counit-left", r,
      d_vcomp(merge, d_hcomp(dot_b, id1)), id1, tags));
  out.push_back(make_equal_case(p + "needle", r, d_vcomp(merge, split), nullptr, tags));
  out.push_back(make_equal_case(p + "frobenius-assoc-right", r,
      d_vcomp(d_hcomp(id1, merge), d_hcomp(split, id1)), d_vcomp(split, merge), tags));
  out.push_back(make_equal_case(p + "frobenius-assoc-left", r,
      d_vcomp(d_hcomp(merge, id1), d_hcomp(id1, split)), d_vcomp(split, merge), tags));

  // Polynomial forcing: f (x) id = id (x) s(f) + ds(f) (broken strand),
  // exercised with f = alpha_s and, when available, f = alpha_t.
  std::vector<Poly> testers{alpha};
  for (int t = 0; t < R.rank(); ++t)
    if (t != s) { testers.push_back(Poly::variable(R.ring(), t)); break; }
  for (std::size_t k = 0; k < testers.size(); ++k) {
    const Poly& f = testers[k];
    Poly sf = R.act_on_poly({static_cast<std::uint8_t>(s)}, f);
    Frac demazure = Frac(f - sf, alpha);  // the divided difference of f
    DPtr lhs = d_hcomp(d_polybox(R, Frac(f)), id1);
    DPtr rhs = d_sum({d_hcomp(id1, d_polybox(R, Frac(sf))),
                      d_scaled(demazure, d_vcomp(dot_b, dot_t))});
    out.push_back(make_equal_case(p + "poly-forcing-" + std::to_string(k), r, lhs, rhs, tags));
  }
  return out;
}

// --- cyclicity of the 2m-valent vertex (twisted form) ---
// Both sides bend one strand of E around; in the unbalanced suite both
// E-morphisms carry the same shading and hence the same polynomial.

inline RelationCase build_cyclicity(const RealizationPtr& r, int s, int t, int shading) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  CoxWord rest = alternating_word(t, s, 2 * m - 1);
  auto c = static_cast<std::uint8_t>(s);
  DPtr lhs = d_vcomp(d_hcomp(d_id(R, {c}), d_pair(R, GenKind::EStar, s, t, shading)),
                     d_hcomp(d_onecolor(R, GenKind::Cup, s), d_id(R, rest)));
  DPtr rhs = d_vcomp(d_hcomp(d_pair(R, GenKind::EStar, t, s, shading), d_id(R, {c})),
                     d_hcomp(d_id(R, rest), d_onecolor(R, GenKind::Cup, s)));
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] +
                     "/cyclicity-shaded-" + R.gen_names()[shading];
  return make_equal_case(name, r, lhs, rhs, {"cyclicity"});
}

// --- the Jones-Wenzl relation: E composed with a dot equals JW' ---

inline RelationCase build_jw(const RealizationPtr& r, int s, int t, int shading) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  CoxWord w = alternating_word(s, t, 2 * m);
  DPtr lhs = d_vcomp(d_pair(R, GenKind::EStar, s, t, shading),
                     dot_on_strand(R, w, w.size() - 1));
  DPtr rhs = d_pair(R, GenKind::JWPrime, s, t, shading);
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] +
                     "/jones-wenzl-shaded-" + R.gen_names()[shading];
  return make_equal_case(name, r, lhs, rhs, {"jw"});
}

// JW' precomposed with all dots evaluates to pi (a 1x1 matrix).
inline RelationCase build_jw_alldots(const RealizationPtr& r, int s, int t, int shading) {
  const Realization& R = *r;
  DPtr jwp = d_pair(R, GenKind::JWPrime, s, t, shading);
  DPtr lhs = d_vcomp(jwp, all_dots(R, jwp->src));
  int oth = shading == s ? t : s;
  DPtr rhs = d_polybox(R, Frac(R.pi(shading, oth)));
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] +
                     "/jw-all-dots-shaded-" + R.gen_names()[shading];
  return make_equal_case(name, r, lhs, rhs, {"jw"});
}

// JW' dies against every pitchfork position.
inline std::vector<RelationCase> build_jw_pitchforks(const RealizationPtr& r, int s, int t,
                                                     int shading) {
  const Realization& R = *r;
  std::vector<RelationCase> out;
  DPtr jwp = d_pair(R, GenKind::JWPrime, s, t, shading);
  const CoxWord& w = jwp->src;
  for (std::size_t center = 1; center + 1 < w.size(); ++center) {
    DPtr lhs = d_vcomp(jwp, pitchfork_at(R, w, center));
    std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] +
                       "/jw-pitchfork-" + std::to_string(center);
    out.push_back(make_equal_case(name, r, lhs, nullptr, {"jw"}));
  }
  return out;
}

// --- two-color associativity ---

inline RelationCase build_assoc(const RealizationPtr& r, int s, int t, int shading) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  auto cs = static_cast<std::uint8_t>(s);
  CoxWord tail = alternating_word(t, s, m - 1);
  DPtr lhs = d_vcomp(d_pair(R, GenKind::Vertex2m, s, t, shading),
                     d_hcomp(d_onecolor(R, GenKind::Merge, s), d_id(R, tail)));
  // Right side: vertex on the last m letters, vertex on the first m letters,
  // then a merge of the two trailing strands of equal color.
  CoxWord target = alternating_word(t, s, m);
  std::uint8_t last = target.back();
  DPtr layer1 = d_hcomp(d_id(R, {cs}), d_pair(R, GenKind::Vertex2m, s, t, shading));
  DPtr layer2 = d_hcomp(d_pair(R, GenKind::Vertex2m, s, t, shading), d_id(R, {last}));
  CoxWord head(target.begin(), target.end() - 1);
  DPtr layer3 = d_hcomp(d_id(R, head), d_onecolor(R, GenKind::Merge, last));
  DPtr rhs = d_vcomp(layer3, d_vcomp(layer2, layer1));
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] +
                     "/two-color-assoc-shaded-" + R.gen_names()[shading];
  return make_equal_case(name, r, lhs, rhs, {"assoc"});
}

// --- I2(m) x A1: the commuting strand slides through the 2m-valent vertex ---

inline RelationCase build_i2m_a1(const RealizationPtr& r, int s, int t, int u, int shading) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  if (R.cox().m[s][u] != 2 || R.cox().m[t][u] != 2)
    throw std::invalid_argument("I2(m) x A1 requires u commuting with s and t");
  auto cu = static_cast<std::uint8_t>(u);
  CoxWord src_st = alternating_word(s, t, m), tgt_st = alternating_word(t, s, m);

  auto slide_right = [&](const CoxWord& word) {
    // u starts on the left of `word` and crosses each strand in turn.
    std::vector<DPtr> layers;
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::vector<DPtr> parts;
      for (std::size_t j = 0; j < i; ++j) parts.push_back(d_id(R, {word[j]}));
      parts.push_back(d_pair(R, GenKind::Vertex2m, u, word[i], u));
      for (std::size_t j = i + 1; j < word.size(); ++j) parts.push_back(d_id(R, {word[j]}));
      layers.push_back(d_hcomp(std::move(parts)));
    }
    return layers;
  };

  DPtr lhs = nullptr;
  {
    std::vector<DPtr> layers = slide_right(src_st);
    DPtr acc = layers[0];
    for (std::size_t i = 1; i < layers.size(); ++i) acc = d_vcomp(layers[i], acc);
    lhs = d_vcomp(d_hcomp(d_pair(R, GenKind::Vertex2m, s, t, shading), d_id(R, {cu})), acc);
  }
  DPtr rhs = nullptr;
  {
    DPtr acc = d_hcomp(d_id(R, {cu}), d_pair(R, GenKind::Vertex2m, s, t, shading));
    for (const auto& layer : slide_right(tgt_st)) acc = d_vcomp(layer, acc);
    rhs = acc;
  }
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] + "x" +
                     R.gen_names()[u] + "/i2m-a1";
  return make_equal_case(name, r, lhs, rhs, {"i2m-a1"});
}

// --- the A3 Zamolodchikov relation ---
// Transcribed from the displayed six-strand diagrams: four 6-valent vertices
// per side plus the 4-valent crossings of the commuting pair; the {s,t}
// vertices are shaded t and the {t,u} vertices shaded u, as printed.

namespace detail_zam {

// Vertex block of the pair (a,b) applied at position `pos` of `word`.
inline DPtr block_at(const Realization& R, const CoxWord& word, std::size_t pos, DPtr block) {
  std::vector<DPtr> parts;
  for (std::size_t j = 0; j < pos; ++j) parts.push_back(d_id(R, {word[j]}));
  parts.push_back(block);
  for (std::size_t j = pos + block->src.size(); j < word.size(); ++j)
    parts.push_back(d_id(R, {word[j]}));
  return d_hcomp(std::move(parts));
}

struct Slice {
  int a, b, shading;
  std::size_t pos;
};

inline DPtr stack(const Realization& R, CoxWord word, const std::vector<Slice>& slices) {
  DPtr acc = nullptr;
  for (const auto& sl : slices) {
    DPtr v = d_pair(R, GenKind::Vertex2m, sl.a, sl.b, sl.shading);
    DPtr layer = block_at(R, word, sl.pos, v);
    acc = acc ? d_vcomp(layer, acc) : layer;
    word = layer->tgt;
  }
  return acc;
}

}  // namespace detail_zam

inline std::pair<DPtr, DPtr> zamolodchikov_a3_sides(const RealizationPtr& r, int s, int t, int u) {
  const Realization& R = *r;
  if (R.cox().m[s][t] != 3 || R.cox().m[t][u] != 3 || R.cox().m[s][u] != 2)
    throw std::invalid_argument("A3 Zamolodchikov requires m_st = m_tu = 3, m_su = 2");
  using detail_zam::Slice;
  CoxWord bottom{static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(t),
                 static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(u),
                 static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(u)};
  std::vector<Slice> lhs_slices = {
      {s, u, s, 2}, {u, t, u, 0}, {t, s, t, 2}, {u, s, u, 1},
      {s, u, s, 4}, {u, t, u, 2}, {t, s, t, 0}};
  std::vector<Slice> rhs_slices = {
      {u, t, u, 3}, {t, s, t, 1}, {u, s, u, 0}, {s, u, s, 3},
      {u, t, u, 1}, {t, s, t, 3}, {u, s, u, 2}};
  DPtr lhs = detail_zam::stack(R, bottom, lhs_slices);
  DPtr rhs = detail_zam::stack(R, bottom, rhs_slices);
  if (lhs->tgt != rhs->tgt) throw std::logic_error("A3 transcription: target words differ");
  return {lhs, rhs};
}

inline RelationCase build_zamolodchikov_a3(const RealizationPtr& r, int s, int t, int u) {
  auto [lhs, rhs] = zamolodchikov_a3_sides(r, s, t, u);
  return make_equal_case(r->name() + "/zamolodchikov-a3", r, lhs, rhs, {"zamolodchikov"});
}

inline RelationCase verify_zamolodchikov_custom(const RealizationPtr& r, DPtr lhs, DPtr rhs,
                                                const std::string& label) {
  return make_equal_case(r->name() + "/zamolodchikov-" + label, r, std::move(lhs), std::move(rhs),
                         {"zamolodchikov"});
}

// --- the unbalanced suite ---

// Rescaling of the two shadings: Lambda(t-shaded vertex) = [m-1]_s Lambda(s-shaded).
inline RelationCase build_rescale(const RealizationPtr& r, int s, int t) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  DPtr lhs = d_pair(R, GenKind::Vertex2m, s, t, t);
  Scalar scale = R.qnum_at(s, t, m - 1, QColor::S);
  DPtr rhs = d_scaled(Frac::constant(R.ring(), scale), d_pair(R, GenKind::Vertex2m, s, t, s));
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] + "/vertex-rescale";
  return make_equal_case(name, r, lhs, rhs, {"unbalanced"});
}

// pi_{s,t} = [m-1]_t pi_{t,s} for m odd.
inline RelationCase build_pi_relation(const RealizationPtr& r, int s, int t) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  DPtr lhs = d_polybox(R, Frac(R.pi(s, t)));
  Scalar scale = R.qnum_at(s, t, m - 1, QColor::T);
  DPtr rhs = d_scaled(Frac::constant(R.ring(), scale), d_polybox(R, Frac(R.pi(t, s))));
  std::string name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] + "/pi-vs-pi";
  return make_equal_case(name, r, lhs, rhs, {"unbalanced"});
}

// The bent Jones-Wenzl morphism rotated by one strand picks up [m-1]_t:
// JW_{s,t} with its first strand wrapped around equals [m-1]_t JW_{t,s}.
inline RelationCase build_whattocallit(const RealizationPtr& r, int s, int t) {
  const Realization& R = *r;
  int m = R.cox().m[s][t];
  RelationCase c;
  c.name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] + "/jw-bent-rotation";
  c.real = r;
  c.tags = {"unbalanced"};
  RealizationPtr rp = r;
  int ss = s, tt = t;
  c.run = [rp, ss, tt, m](LambdaEval& ev) -> std::optional<std::string> {
    const Realization& R = *rp;
    DPtr jw_st = ev.jw_bent_diagram(ss, tt, ss);
    DPtr lhs = rotate_first_to_last(R, jw_st);
    Scalar scale = R.qnum_at(ss, tt, m - 1, QColor::T);
    DPtr jw_ts = ev.jw_bent_diagram(tt, ss, tt);
    DPtr rhs = d_scaled(Frac::constant(R.ring(), scale), jw_ts);
    LocMatrix a = ev.eval(lhs), b = ev.eval(rhs);
    if (a != b) return "matrices differ:" + describe_diff(a, b);
    return std::nullopt;
  };
  return c;
}

// Dot-through-vertex expansion: the difference between Lambda(G o dot-on-first)
// and the pull-through term has vanishing all-ones row (the remaining terms
// carry a pitchfork on top, which kills that row).
inline RelationCase build_most_terms_p(const RealizationPtr& r, int s, int t, int shading) {
  const Realization& R = *r;
  RelationCase c;
  c.name = R.name() + "/" + R.gen_names()[s] + R.gen_names()[t] + "/dot-through-vertex-shaded-" +
           R.gen_names()[shading];
  c.real = r;
  c.tags = {"unbalanced"};
  int ss = s, tt = t, sh = shading;
  RealizationPtr rp = r;
  c.run = [rp, ss, tt, sh](LambdaEval& ev) -> std::optional<std::string> {
    const Realization& R = *rp;
    int m = R.cox().m[ss][tt];
    CoxWord src = alternating_word(ss, tt, m), tgt = alternating_word(tt, ss, m);
    DPtr lhs = d_vcomp(d_pair(R, GenKind::Vertex2m, ss, tt, sh), dot_on_strand(R, src, 0));
    CoxWord head(tgt.begin(), tgt.end() - 1);
    DPtr pull = d_hcomp(d_id(R, head), d_onecolor(R, GenKind::DotBottom, tgt.back()));
    // The t-shaded vertex pulls the dot through with coefficient 1; the
    // s-shaded one picks up [m-1]_t.
    LocMatrix diff = ev.eval(lhs) - ev.eval(pull).scaled(
        Frac::constant(R.ring(), sh == tt ? Scalar::one(R.field())
                                          : R.qnum_at(ss, tt, m - 1, QColor::T)));
    std::uint32_t ones_row = static_cast<std::uint32_t>((1u << m) - 1);
    for (const auto& [rc, v] : diff.entries())
      if (rc.first == ones_row && !v.is_zero())
        return "all-ones row of the difference is nonzero";
    return std::nullopt;
  };
  return c;
}

inline std::vector<RelationCase> build_unbalanced_suite(const RealizationPtr& r, int s, int t) {
  std::vector<RelationCase> out;
  out.push_back(build_rescale(r, s, t));
  out.push_back(build_pi_relation(r, s, t));
  for (int sh : {s, t}) {
    out.push_back(build_cyclicity(r, s, t, sh));
    out.push_back(build_most_terms_p(r, s, t, sh));
  }
  // The shaded relations pair a vertex on (x,y,x,...) with the y-shading
  // (associativity) or the x-shading (dotted vertex); the color swap gives
  // the other member of each family.
  out.push_back(build_assoc(r, s, t, t));
  out.push_back(build_assoc(r, t, s, s));
  for (auto [a, b] : {std::pair<int, int>{s, t}, {t, s}}) {
    out.push_back(build_jw(r, a, b, a));
    out.push_back(build_jw_alldots(r, a, b, a));
  }
  out.push_back(build_whattocallit(r, s, t));
  return out;
}

// --- suite selection over a realization ---

inline bool pair_has_vertex(const Realization& R, int s, int t) {
  int m = R.cox().m[s][t];
  if (m == 0) return false;
  try {
    return is_rotatable(R.x_of(s, t), R.x_of(t, s), m - 1);
  } catch (const std::domain_error&) {
    return false;
  }
}

inline std::vector<RelationCase> build_suite(const RealizationPtr& r, const std::string& suite) {
  const Realization& R = *r;
  std::vector<RelationCase> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };

  if (want("one-color"))
    for (int s = 0; s < R.rank(); ++s) {
      auto cases = build_one_color_suite(r, s);
      out.insert(out.end(), cases.begin(), cases.end());
    }

  for (int s = 0; s < R.rank(); ++s)
    for (int t = 0; t < R.rank(); ++t) {
      if (s == t || R.cox().m[s][t] == 0) continue;
      if (s > t) continue;
      if (!pair_has_vertex(R, s, t)) continue;
      bool odd = R.cox().m[s][t] % 2 == 1;
      bool unbalanced_pair = odd && !R.is_balanced_pair(s, t);
      if (want("cyclicity")) out.push_back(build_cyclicity(r, s, t, s));
      if (want("jw")) {
        out.push_back(build_jw(r, s, t, s));
        out.push_back(build_jw_alldots(r, s, t, s));
        auto pf = build_jw_pitchforks(r, s, t, s);
        out.insert(out.end(), pf.begin(), pf.end());
      }
      if (want("assoc")) out.push_back(build_assoc(r, s, t, t));
      if (want("unbalanced") && unbalanced_pair) {
        auto cases = build_unbalanced_suite(r, s, t);
        out.insert(out.end(), cases.begin(), cases.end());
      }
    }

  if (want("i2m-a1"))
    for (int s = 0; s < R.rank(); ++s)
      for (int t = s + 1; t < R.rank(); ++t)
        for (int u = 0; u < R.rank(); ++u) {
          if (u == s || u == t) continue;
          if (R.cox().m[s][t] == 0 || R.cox().m[s][u] != 2 || R.cox().m[t][u] != 2) continue;
          if (!pair_has_vertex(R, s, t)) continue;
          out.push_back(build_i2m_a1(r, s, t, u, s));
        }

  if (want("zamolodchikov"))
    for (int s = 0; s < R.rank(); ++s)
      for (int t = 0; t < R.rank(); ++t)
        for (int u = 0; u < R.rank(); ++u) {
          if (s == t || t == u || s == u) continue;
          if (s > u) continue;  // the relation is symmetric in (s,u) reversal
          if (R.cox().m[s][t] == 3 && R.cox().m[t][u] == 3 && R.cox().m[s][u] == 2)
            out.push_back(build_zamolodchikov_a3(r, s, t, u));
        }

  // Overlapping selections can produce identical cases; keep one of each.
  std::stable_sort(out.begin(), out.end(),
                   [](const RelationCase& a, const RelationCase& b) { return a.name < b.name; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RelationCase& a, const RelationCase& b) {
                          return a.name == b.name;
                        }),
            out.end());
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"one-color", "cyclicity", "jw", "assoc",
                                              "i2m-a1", "zamolodchikov", "unbalanced", "all"};
  return names;
}

}  // namespace heckeloc
