#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeloc/groupoid.hpp"
#include "heckeloc/tl.hpp"

namespace heckeloc {

// Diagram AST for morphisms of the diagrammatic Hecke category, and the
// localization functor Lambda turning diagrams into sparse matrices of
// fractions. Generator matrices follow the one-color tables; the 2m-valent
// vertex is obtained from its fully twisted form E by unbending, and the
// Jones-Wenzl morphism JW' is compiled from the specialized projector via the
// deformation-retract images of its crossingless matchings.

enum class GenKind { Id, PolyBox, DotTop, DotBottom, Merge, Split, Cap, Cup, Vertex2m, EStar, JWPrime };

struct Generator {
  GenKind kind = GenKind::Id;
  CoxWord word;    // Id
  Frac poly;       // PolyBox
  int s = -1, t = -1, shading = -1;
};

struct Diagram;
using DPtr = std::shared_ptr<const Diagram>;

struct Diagram {
  enum class Kind { Gen, VComp, HComp, Scaled, Sum };
  Kind kind = Kind::Gen;
  Generator gen;
  DPtr top, bottom;          // VComp
  DPtr left, right;          // HComp
  Frac coeff;                // Scaled
  DPtr inner;                // Scaled
  std::vector<DPtr> parts;   // Sum
  CoxWord src, tgt;
  std::optional<long long> degree;  // graded degree when defined
};

// --- boundary/degree computation and node constructors ---

inline CoxWord generator_source(const Realization& r, const Generator& g) {
  switch (g.kind) {
    case GenKind::Id: return g.word;
    case GenKind::PolyBox: return {};
    case GenKind::DotTop: return {static_cast<std::uint8_t>(g.s)};
    case GenKind::DotBottom: return {};
    case GenKind::Merge: return CoxWord{static_cast<std::uint8_t>(g.s), static_cast<std::uint8_t>(g.s)};
    case GenKind::Split: return {static_cast<std::uint8_t>(g.s)};
    case GenKind::Cap: return CoxWord{static_cast<std::uint8_t>(g.s), static_cast<std::uint8_t>(g.s)};
    case GenKind::Cup: return {};
    case GenKind::Vertex2m: return alternating_word(g.s, g.t, r.cox().m[g.s][g.t]);
    case GenKind::EStar: return alternating_word(g.s, g.t, 2 * r.cox().m[g.s][g.t]);
    case GenKind::JWPrime: {
      // The compiled projector's leftmost color is the shading.
      int first = g.shading, second = first == g.s ? g.t : g.s;
      return alternating_word(first, second, 2 * r.cox().m[g.s][g.t] - 1);
    }
  }
  return {};
}

inline CoxWord generator_target(const Realization& r, const Generator& g) {
  switch (g.kind) {
    case GenKind::Id: return g.word;
    case GenKind::PolyBox: return {};
    case GenKind::DotTop: return {};
    case GenKind::DotBottom: return {static_cast<std::uint8_t>(g.s)};
    case GenKind::Merge: return {static_cast<std::uint8_t>(g.s)};
    case GenKind::Split: return CoxWord{static_cast<std::uint8_t>(g.s), static_cast<std::uint8_t>(g.s)};
    case GenKind::Cap: return {};
    case GenKind::Cup: return CoxWord{static_cast<std::uint8_t>(g.s), static_cast<std::uint8_t>(g.s)};
    case GenKind::Vertex2m: return alternating_word(g.t, g.s, r.cox().m[g.s][g.t]);
    case GenKind::EStar: return {};
    case GenKind::JWPrime: return {};
  }
  return {};
}

inline std::optional<long long> generator_degree(const Generator& g) {
  switch (g.kind) {
    case GenKind::Id: return 0;
    case GenKind::PolyBox: return g.poly.is_zero() ? std::optional<long long>(0) : g.poly.graded_degree();
    case GenKind::DotTop:
    case GenKind::DotBottom: return 1;
    case GenKind::Merge:
    case GenKind::Split: return -1;
    case GenKind::Cap:
    case GenKind::Cup:
    case GenKind::Vertex2m:
    case GenKind::EStar: return 0;
    case GenKind::JWPrime: return 1;
  }
  return std::nullopt;
}

inline DPtr d_gen(const Realization& r, Generator g) {
  auto d = std::make_shared<Diagram>();
  d->kind = Diagram::Kind::Gen;
  d->src = generator_source(r, g);
  d->tgt = generator_target(r, g);
  d->degree = generator_degree(g);
  d->gen = std::move(g);
  return d;
}

inline DPtr d_id(const Realization& r, CoxWord w) {
  Generator g;
  g.kind = GenKind::Id;
  g.word = std::move(w);
  return d_gen(r, g);
}

inline DPtr d_polybox(const Realization& r, Frac f) {
  Generator g;
  g.kind = GenKind::PolyBox;
  g.poly = std::move(f);
  return d_gen(r, g);
}

inline DPtr d_onecolor(const Realization& r, GenKind kind, int s) {
  Generator g;
  g.kind = kind;
  g.s = s;
  return d_gen(r, g);
}

inline DPtr d_pair(const Realization& r, GenKind kind, int s, int t, int shading) {
  if (s == t) throw std::invalid_argument("two-color generator requires distinct reflections");
  if (r.cox().m[s][t] == 0)
    throw std::invalid_argument("two-color generator requires a finite m_st");
  Generator g;
  g.kind = kind;
  g.s = s;
  g.t = t;
  g.shading = shading < 0 ? s : shading;
  return d_gen(r, g);
}

inline DPtr d_vcomp(DPtr top, DPtr bottom) {
  if (bottom->tgt != top->src)
    throw std::invalid_argument("vertical composition: boundary mismatch");
  auto d = std::make_shared<Diagram>();
  d->kind = Diagram::Kind::VComp;
  d->src = bottom->src;
  d->tgt = top->tgt;
  if (top->degree && bottom->degree) d->degree = *top->degree + *bottom->degree;
  d->top = std::move(top);
  d->bottom = std::move(bottom);
  return d;
}

inline DPtr d_hcomp(DPtr left, DPtr right) {
  auto d = std::make_shared<Diagram>();
  d->kind = Diagram::Kind::HComp;
  d->src = left->src;
  d->src.insert(d->src.end(), right->src.begin(), right->src.end());
  d->tgt = left->tgt;
  d->tgt.insert(d->tgt.end(), right->tgt.begin(), right->tgt.end());
  if (left->degree && right->degree) d->degree = *left->degree + *right->degree;
  d->left = std::move(left);
  d->right = std::move(right);
  return d;
}

inline DPtr d_hcomp(std::vector<DPtr> parts) {
  if (parts.empty()) throw std::invalid_argument("empty horizontal composition");
  DPtr acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = d_hcomp(acc, parts[i]);
  return acc;
}

inline DPtr d_scaled(Frac coeff, DPtr inner) {
  auto d = std::make_shared<Diagram>();
  d->kind = Diagram::Kind::Scaled;
  d->src = inner->src;
  d->tgt = inner->tgt;
  if (inner->degree) {
    if (auto cd = coeff.is_zero() ? std::optional<long long>(0) : coeff.graded_degree())
      d->degree = *inner->degree + *cd;
  }
  d->coeff = std::move(coeff);
  d->inner = std::move(inner);
  return d;
}

inline DPtr d_sum(std::vector<DPtr> parts) {
  if (parts.empty()) throw std::invalid_argument("empty sum");
  auto d = std::make_shared<Diagram>();
  d->kind = Diagram::Kind::Sum;
  d->src = parts[0]->src;
  d->tgt = parts[0]->tgt;
  d->degree = parts[0]->degree;
  for (const auto& p : parts) {
    if (p->src != d->src || p->tgt != d->tgt)
      throw std::invalid_argument("sum: boundary mismatch");
    if (!p->degree || !d->degree || *p->degree != *d->degree) d->degree = std::nullopt;
  }
  d->parts = std::move(parts);
  return d;
}

// --- convenience builders ---

// Tensor product of bottom dots: 1 -> B_{w_1} ... B_{w_d}.
inline DPtr all_dots(const Realization& r, const CoxWord& w) {
  std::vector<DPtr> parts;
  for (auto s : w) parts.push_back(d_onecolor(r, GenKind::DotBottom, s));
  return d_hcomp(std::move(parts));
}

// Identity on word with a bottom dot on strand i: word-minus-i -> word.
inline DPtr dot_on_strand(const Realization& r, const CoxWord& w, std::size_t i) {
  std::vector<DPtr> parts;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == i) parts.push_back(d_onecolor(r, GenKind::DotBottom, w[j]));
    else parts.push_back(d_id(r, {w[j]}));
  }
  return d_hcomp(std::move(parts));
}

// Pitchfork B_c -> B_c B_c' B_c: split with a bottom dot in the middle.
inline DPtr pitchfork_gen(const Realization& r, int c, int cmid) {
  DPtr split = d_onecolor(r, GenKind::Split, c);
  DPtr layer = d_hcomp({d_id(r, {static_cast<std::uint8_t>(c)}),
                        d_onecolor(r, GenKind::DotBottom, cmid),
                        d_id(r, {static_cast<std::uint8_t>(c)})});
  return d_vcomp(layer, split);
}

// Inverted pitchfork B_c B_c' B_c -> B_c: top dot in the middle, then merge.
inline DPtr inv_pitchfork_gen(const Realization& r, int c, int cmid) {
  DPtr layer = d_hcomp({d_id(r, {static_cast<std::uint8_t>(c)}),
                        d_onecolor(r, GenKind::DotTop, cmid),
                        d_id(r, {static_cast<std::uint8_t>(c)})});
  return d_vcomp(d_onecolor(r, GenKind::Merge, c), layer);
}

// Pitchfork landing on strands (center-1, center, center+1) of `word`;
// the source drops the two outer strands' copies.
inline DPtr pitchfork_at(const Realization& r, const CoxWord& word, std::size_t center) {
  if (center == 0 || center + 1 >= word.size())
    throw std::out_of_range("pitchfork position out of range");
  if (word[center - 1] != word[center + 1])
    throw std::invalid_argument("pitchfork needs equal outer colors");
  std::vector<DPtr> parts;
  for (std::size_t j = 0; j + 1 < center; ++j) parts.push_back(d_id(r, {word[j]}));
  parts.push_back(pitchfork_gen(r, word[center - 1], word[center]));
  for (std::size_t j = center + 2; j < word.size(); ++j) parts.push_back(d_id(r, {word[j]}));
  return d_hcomp(std::move(parts));
}

// --- bending helpers (adjunction moves) ---

// D: U (x) (c) -> V   ==>   U -> V (x) (c)   (unbend last source strand up the right)
inline DPtr unbend_last_source(const Realization& r, const DPtr& d) {
  if (d->src.empty()) throw std::invalid_argument("unbend: empty source");
  std::uint8_t c = d->src.back();
  CoxWord u(d->src.begin(), d->src.end() - 1);
  DPtr lower = u.empty() ? d_onecolor(r, GenKind::Cup, c)
                         : d_hcomp(d_id(r, u), d_onecolor(r, GenKind::Cup, c));
  DPtr upper = d_hcomp(d, d_id(r, {c}));
  return d_vcomp(upper, lower);
}

// D: U -> V (x) (c)   ==>   U (x) (c) -> V   (bend last target strand down the right)
inline DPtr bend_last_target(const Realization& r, const DPtr& d) {
  if (d->tgt.empty()) throw std::invalid_argument("bend: empty target");
  std::uint8_t c = d->tgt.back();
  CoxWord v(d->tgt.begin(), d->tgt.end() - 1);
  DPtr lower = d_hcomp(d, d_id(r, {c}));
  DPtr upper = v.empty() ? d_onecolor(r, GenKind::Cap, c)
                         : d_hcomp(d_id(r, v), d_onecolor(r, GenKind::Cap, c));
  return d_vcomp(upper, lower);
}

// D: (c) (x) U -> 1   ==>   U (x) (c) -> 1   (rotate the first strand around)
inline DPtr rotate_first_to_last(const Realization& r, const DPtr& d) {
  if (d->src.empty() || !d->tgt.empty())
    throw std::invalid_argument("rotate_first_to_last expects a map to the monoidal identity");
  std::uint8_t c = d->src.front();
  CoxWord u(d->src.begin() + 1, d->src.end());
  // D1 = (id_c (x) D) o (cup_c (x) id_U) : U -> (c)
  DPtr lower = u.empty() ? d_onecolor(r, GenKind::Cup, c)
                         : d_hcomp(d_onecolor(r, GenKind::Cup, c), d_id(r, u));
  DPtr upper = d_hcomp(d_id(r, {c}), d);
  DPtr d1 = d_vcomp(upper, lower);
  // D' = cap_c o (D1 (x) id_c)
  return d_vcomp(d_onecolor(r, GenKind::Cap, c), d_hcomp(d1, d_id(r, {c})));
}

// --- the deformation-retract image of a crossingless matching ---
// Each TL cap becomes an inverted pitchfork, each TL cup a pitchfork, and
// through strands become identities. Layers peel one innermost arc at a time;
// any retract convention is acceptable, and this one grafts each fork to the
// nearest same-color strand on the left.

namespace detail_sigma {

inline CoxWord region_word(const Matching& m, bool top_side, int gen_s, int gen_t) {
  int pts = top_side ? m.nt : m.nb;
  CoxWord w;
  for (int j = 0; j <= pts; ++j)
    w.push_back(static_cast<std::uint8_t>(((m.leftmost + j) % 2 == 0) ? gen_s : gen_t));
  return w;
}

// Remove a bottom arc joining bottom points i, i+1.
inline Matching peel_bottom(const Matching& m, int i) {
  Matching r;
  r.nb = m.nb - 2;
  r.nt = m.nt;
  r.leftmost = m.leftmost;
  r.inv.assign(r.nb + r.nt, -1);
  auto remap = [&](int idx) {
    if (idx < m.nb) return idx < i ? idx : idx - 2;  // bottom
    return r.circ_of_top(m.top_of_circ(idx));
  };
  for (int idx = 0; idx < m.points(); ++idx) {
    if (idx == i || idx == i + 1 || m.inv[idx] < idx) continue;
    int a = remap(idx), b = remap(m.inv[idx]);
    r.inv[a] = b;
    r.inv[b] = a;
  }
  return r;
}

// Remove a top arc joining top points j, j+1.
inline Matching peel_top(const Matching& m, int j) {
  Matching r;
  r.nb = m.nb;
  r.nt = m.nt - 2;
  r.leftmost = m.leftmost;
  r.inv.assign(r.nb + r.nt, -1);
  int cj0 = m.circ_of_top(j), cj1 = m.circ_of_top(j + 1);
  auto remap = [&](int idx) {
    if (idx < m.nb) return idx;
    int tj = m.top_of_circ(idx);
    return r.circ_of_top(tj < j ? tj : tj - 2);
  };
  for (int idx = 0; idx < m.points(); ++idx) {
    if (idx == cj0 || idx == cj1 || m.inv[idx] < idx) continue;
    if (m.inv[idx] == cj0 || m.inv[idx] == cj1) continue;
    int a = remap(idx), b = remap(m.inv[idx]);
    r.inv[a] = b;
    r.inv[b] = a;
  }
  return r;
}

}  // namespace detail_sigma

inline DPtr sigma_image(const Realization& r, const Matching& m0, int gen_s, int gen_t) {
  using namespace detail_sigma;
  std::vector<DPtr> lower_layers;  // bottom-up
  std::vector<DPtr> upper_layers;  // top-down, reversed at the end
  Matching cur = m0;

  // Peel bottom caps (innermost adjacent pairs first).
  for (;;) {
    int found = -1;
    for (int i = 0; i + 1 < cur.nb; ++i)
      if (cur.inv[i] == i + 1) { found = i; break; }
    if (found < 0) break;
    CoxWord w = region_word(cur, false, gen_s, gen_t);
    std::vector<DPtr> parts;
    for (int j = 0; j < found; ++j) parts.push_back(d_id(r, {w[j]}));
    parts.push_back(inv_pitchfork_gen(r, w[found], w[found + 1]));
    for (int j = found + 3; j < static_cast<int>(w.size()); ++j) parts.push_back(d_id(r, {w[j]}));
    lower_layers.push_back(d_hcomp(std::move(parts)));
    cur = peel_bottom(cur, found);
  }

  // Peel top cups (innermost adjacent pairs first; these are the topmost layers).
  for (;;) {
    int found = -1;
    for (int j = 0; j + 1 < cur.nt; ++j)
      if (cur.inv[cur.circ_of_top(j)] == cur.circ_of_top(j + 1)) { found = j; break; }
    if (found < 0) break;
    // Source of this layer is the shape after removing the cup.
    Matching below = peel_top(cur, found);
    CoxWord w = region_word(cur, true, gen_s, gen_t);
    std::vector<DPtr> parts;
    for (int j = 0; j < found; ++j) parts.push_back(d_id(r, {w[j]}));
    parts.push_back(pitchfork_gen(r, w[found], w[found + 1]));
    for (int j = found + 3; j < static_cast<int>(w.size()); ++j) parts.push_back(d_id(r, {w[j]}));
    upper_layers.push_back(d_hcomp(std::move(parts)));
    cur = below;
  }

  if (!cur.is_identity())
    throw std::logic_error("matching decomposition did not end at the identity");

  // Bottom-up: cap layers in peel order, then cup layers outermost first.
  std::vector<DPtr> seq = std::move(lower_layers);
  for (auto it = upper_layers.rbegin(); it != upper_layers.rend(); ++it) seq.push_back(*it);
  if (seq.empty()) return d_id(r, region_word(cur, false, gen_s, gen_t));
  DPtr acc = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) acc = d_vcomp(seq[i], acc);
  return acc;
}

// --- the evaluator ---

// Expensive per-pair artifacts (vertex matrices, compiled Jones-Wenzl
// morphisms, rotatability verdicts) are shared across evaluators of the same
// realization; per-diagram evaluation memos stay evaluator-local.
struct PairCache {
  std::recursive_mutex mu;
  std::map<std::tuple<int, int, int>, LocMatrix> vertex;
  std::map<std::tuple<int, int, int>, DPtr> jwp_diag;
  std::map<std::tuple<int, int, int>, LocMatrix> jwp_mat;
  std::map<std::pair<int, int>, std::string> rotatable;

  static std::shared_ptr<PairCache> of(const RealizationPtr& real) {
    static std::mutex table_mu;
    static std::map<RealizationPtr, std::shared_ptr<PairCache>> table;
    std::lock_guard<std::mutex> lock(table_mu);
    auto& slot = table[real];
    if (!slot) slot = std::make_shared<PairCache>();
    return slot;
  }
};

class LambdaEval {
 public:
  explicit LambdaEval(RealizationPtr real)
      : r_(std::move(real)), obj_(LocMatrix::object_cache(*r_)), cache_(PairCache::of(r_)) {}

  const Realization& realization() const { return *r_; }

  LocMatrix eval(const DPtr& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    LocMatrix m = eval_uncached(d);
    memo_.emplace(d, m);  // holds the node alive; addresses never recycle
    return m;
  }

  LocMatrix gen_matrix(const Generator& g) {
    const Realization& r = *r_;
    const RingPtr& ring = r.ring();
    CoxWord sw = generator_source(r, g), tw = generator_target(r, g);
    LocMatrix m(obj_(sw), obj_(tw), ring);
    auto alpha = [&](int s) { return Poly::variable(ring, s); };
    Frac one = Frac::one(ring);
    switch (g.kind) {
      case GenKind::Id:
        return LocMatrix::identity(obj_(sw), ring);
      case GenKind::PolyBox:
        m.set(0, 0, g.poly);
        return m;
      case GenKind::DotTop:  // (alpha 0)
        m.set(0, 0, Frac(alpha(g.s)));
        return m;
      case GenKind::DotBottom:  // (1; 0)
        m.set(0, 0, one);
        return m;
      case GenKind::Split: {
        Frac inv_alpha = Frac(Poly::from_int(ring, 1), alpha(g.s));
        m.set(0b00, 0, inv_alpha);
        m.set(0b01, 1, inv_alpha);
        m.set(0b10, 1, -inv_alpha);
        m.set(0b11, 0, -inv_alpha);
        return m;
      }
      case GenKind::Merge:
        m.set(0, 0b00, one);
        m.set(0, 0b11, one);
        m.set(1, 0b01, one);
        m.set(1, 0b10, one);
        return m;
      case GenKind::Cup: {
        Frac inv_alpha = Frac(Poly::from_int(ring, 1), alpha(g.s));
        m.set(0b00, 0, inv_alpha);
        m.set(0b11, 0, -inv_alpha);
        return m;
      }
      case GenKind::Cap:
        m.set(0, 0b00, Frac(alpha(g.s)));
        m.set(0, 0b11, Frac(alpha(g.s)));
        return m;
      case GenKind::EStar: {
        require_rotatable(g.s, g.t);
        int sh = g.shading;
        int oth = sh == g.s ? g.t : g.s;
        Frac pi = Frac(r.pi(sh, oth));
        const auto& eps = m.src()->endpoints;
        for (std::uint32_t col = 0; col < eps.size(); ++col)
          if (eps[col].is_identity()) m.set(0, col, pi);
        return m;
      }
      case GenKind::Vertex2m:
        return vertex_matrix(g.s, g.t, g.shading);
      case GenKind::JWPrime: {
        auto key = std::make_tuple(g.s, g.t, g.shading);
        std::lock_guard<std::recursive_mutex> lock(cache_->mu);
        auto it = cache_->jwp_mat.find(key);
        if (it != cache_->jwp_mat.end()) return it->second;
        LocMatrix jm = eval(jwprime_diagram(g.s, g.t, g.shading));
        cache_->jwp_mat.emplace(key, jm);
        return jm;
      }
    }
    throw std::logic_error("unhandled generator");
  }

  // The 2m-valent vertex: unbend the last m strands of E up the right side.
  LocMatrix vertex_matrix(int s, int t, int shading) {
    auto key = std::make_tuple(s, t, shading);
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto it = cache_->vertex.find(key);
    if (it != cache_->vertex.end()) return it->second;
    const Realization& r = *r_;
    int m = r.cox().m[s][t];
    Generator e;
    e.kind = GenKind::EStar;
    e.s = s;
    e.t = t;
    e.shading = shading;
    LocMatrix cur = gen_matrix(e);
    for (int step = 0; step < m; ++step) cur = unbend_last_source_matrix(cur);
    cache_->vertex.emplace(key, cur);
    return cur;
  }

  // Closed-formula route for the vertex (Lemma-style): entry at (e', e) with
  // equal endpoints is pi_{s,t} / zeta(e'). Used as an independent check.
  LocMatrix vertex_matrix_closed(int s, int t) {
    const Realization& r = *r_;
    int m = r.cox().m[s][t];
    CoxWord sw = alternating_word(s, t, m), tw = alternating_word(t, s, m);
    LocMatrix out(obj_(sw), obj_(tw), r.ring());
    Poly pi = r.pi(s, t);
    const auto& srce = out.src()->endpoints;
    const auto& tgte = out.tgt()->endpoints;
    for (std::uint32_t row = 0; row < tgte.size(); ++row) {
      Frac value(pi, r.zeta(s, t, sub_of_index(row, m)));
      for (std::uint32_t col = 0; col < srce.size(); ++col)
        if (srce[col] == tgte[row]) out.set(row, col, value);
    }
    return out;
  }

  // JW'_{s,t}: the all-arms-down Jones-Wenzl morphism, compiled from the
  // specialized projector. For shading s the projector has leftmost region
  // color s; a bottom dot on the last strand and m bends produce a map
  // from the alternating word of length 2m-1 to the monoidal identity.
  DPtr jwprime_diagram(int s, int t, int shading) {
    auto key = std::make_tuple(s, t, shading);
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto it = cache_->jwp_diag.find(key);
    if (it != cache_->jwp_diag.end()) return it->second;
    const Realization& r = *r_;
    require_rotatable(s, t);
    int m = r.cox().m[s][t];
    int gs = shading, gt = shading == s ? t : s;
    auto jw = jw_specialize(r.x_of(gs, gt), r.x_of(gt, gs), m - 1, /*leftmost=*/0);
    if (!jw) throw std::logic_error("rotatable check passed but JW specialization failed");
    std::vector<DPtr> parts;
    for (const auto& [match, c] : jw->terms) {
      DPtr body = sigma_image(r, match, gs, gt);
      CoxWord w = body->src;
      CoxWord winit(w.begin(), w.end() - 1);
      DPtr dotted = d_vcomp(body, d_hcomp(d_id(r, winit),
                                          d_onecolor(r, GenKind::DotBottom, w.back())));
      for (int i = 0; i < m; ++i) dotted = bend_last_target(r, dotted);
      parts.push_back(d_scaled(Frac::constant(r.ring(), c), dotted));
    }
    DPtr sum = d_sum(std::move(parts));
    cache_->jwp_diag.emplace(key, sum);
    return sum;
  }

  // JW_{s,t}: the bent picture of the rotated projector, a degree +2 map
  // from the alternating word of length 2(m-1) to the monoidal identity.
  DPtr jw_bent_diagram(int s, int t, int shading) {
    const Realization& r = *r_;
    require_rotatable(s, t);
    int m = r.cox().m[s][t];
    int gs = shading, gt = shading == s ? t : s;
    auto jw = jw_specialize(r.x_of(gs, gt), r.x_of(gt, gs), m - 1, /*leftmost=*/0);
    if (!jw) throw std::logic_error("rotatable check passed but JW specialization failed");
    std::vector<DPtr> parts;
    for (const auto& [match, c] : jw->terms) {
      DPtr body = sigma_image(r, match, gs, gt);
      CoxWord w = body->src;  // length m
      CoxWord winit(w.begin(), w.end() - 1);
      // ^2JW: top dot on the first strand, bottom dot on the last strand.
      DPtr dotted = d_vcomp(body, d_hcomp(d_id(r, winit),
                                          d_onecolor(r, GenKind::DotBottom, w.back())));
      CoxWord wtail(w.begin() + 1, w.end());
      dotted = d_vcomp(d_hcomp(d_onecolor(r, GenKind::DotTop, w.front()), d_id(r, wtail)),
                       dotted);
      for (int i = 0; i + 1 < m; ++i) dotted = bend_last_target(r, dotted);
      parts.push_back(d_scaled(Frac::constant(r.ring(), c), dotted));
    }
    return d_sum(std::move(parts));
  }

  // A 2m-valent vertex exists only when JW_{m-1} exists and is rotatable.
  void require_rotatable(int s, int t) {
    auto key = std::make_pair(std::min(s, t), std::max(s, t));
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto it = cache_->rotatable.find(key);
    if (it == cache_->rotatable.end()) {
      const Realization& r = *r_;
      std::string err;
      if (r.cox().m[s][t] == 0) {
        err = "m is infinite";
      } else {
        int m = r.cox().m[s][t];
        try {
          if (!is_rotatable(r.x_of(s, t), r.x_of(t, s), m - 1))
            err = "JW_{m-1} exists but is not rotatable";
        } catch (const std::domain_error&) {
          err = "JW_{m-1} does not exist at this realization";
        }
      }
      it = cache_->rotatable.emplace(key, err).first;
    }
    if (!it->second.empty()) {
      const auto& names = r_->gen_names();
      throw std::domain_error("2m-valent vertex unavailable for the pair (" + names[s] + "," +
                              names[t] + "): " + it->second);
    }
  }

  ObjPtr object(const CoxWord& w) { return obj_(w); }

 private:
  RealizationPtr r_;
  std::function<ObjPtr(const CoxWord&)> obj_;
  std::shared_ptr<PairCache> cache_;
  std::map<DPtr, LocMatrix> memo_;

  LocMatrix eval_uncached(const DPtr& d) {
    switch (d->kind) {
      case Diagram::Kind::Gen: return gen_matrix(d->gen);
      case Diagram::Kind::VComp: return compose(eval(d->top), eval(d->bottom));
      case Diagram::Kind::HComp: return tensor(*r_, eval(d->left), eval(d->right));
      case Diagram::Kind::Scaled: return eval(d->inner).scaled(d->coeff);
      case Diagram::Kind::Sum: {
        LocMatrix acc = eval(d->parts[0]);
        for (std::size_t i = 1; i < d->parts.size(); ++i) acc = acc + eval(d->parts[i]);
        return acc;
      }
    }
    throw std::logic_error("unhandled diagram node");
  }

  // Matrix-level unbend: D: U (x) (c) -> V  ==>  U -> V (x) (c).
  LocMatrix unbend_last_source_matrix(const LocMatrix& d) {
    const Realization& r = *r_;
    CoxWord src = d.src()->word;
    std::uint8_t c = src.back();
    CoxWord u(src.begin(), src.end() - 1);
    Generator cup;
    cup.kind = GenKind::Cup;
    cup.s = c;
    LocMatrix cupm = gen_matrix(cup);
    LocMatrix lower = u.empty() ? cupm
                                : tensor(r, LocMatrix::identity(obj_(u), r.ring()), cupm);
    Generator idc;
    idc.kind = GenKind::Id;
    idc.word = {c};
    LocMatrix upper = tensor(r, d, gen_matrix(idc));
    return compose(upper, lower);
  }
};

}  // namespace heckeloc
