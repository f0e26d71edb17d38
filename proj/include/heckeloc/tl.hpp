#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "heckeloc/quantum.hpp"
#include "heckeloc/realization.hpp"

namespace heckeloc {

// The two-colored Temperley-Lieb category: crossingless matchings with
// alternating region colors, composition with circle evaluation, Jones-Wenzl
// projectors, partial traces, rotation, and polynomial evaluation.
//
// Boundary points are indexed circularly: bottom left-to-right, then top
// right-to-left. Planarity is non-crossing of chords in that order. Regions
// at any horizontal level alternate from the leftmost color, one flip per
// strand crossed.

struct Matching {
  int nb = 0, nt = 0;      // bottom / top point counts
  int leftmost = 0;        // 0 = s, 1 = t
  std::vector<int> inv;    // fixed-point-free involution on 0 .. nb+nt-1

  int points() const { return nb + nt; }
  int circ_of_top(int j) const { return nb + (nt - 1 - j); }
  int top_of_circ(int i) const { return nt - 1 - (i - nb); }

  static Matching identity(int n, int leftmost) {
    Matching m;
    m.nb = m.nt = n;
    m.leftmost = leftmost;
    m.inv.resize(2 * n);
    for (int j = 0; j < n; ++j) {
      m.inv[j] = m.circ_of_top(j);
      m.inv[m.circ_of_top(j)] = j;
    }
    return m;
  }

  // cup_i : (n-2) -> n, arc joining top points i, i+1.
  static Matching cup(int n, int i, int leftmost) {
    Matching m;
    m.nb = n - 2;
    m.nt = n;
    m.leftmost = leftmost;
    m.inv.assign(2 * n - 2, -1);
    int a = m.circ_of_top(i), b = m.circ_of_top(i + 1);
    m.inv[a] = b;
    m.inv[b] = a;
    int tj = 0;
    for (int j = 0; j < m.nb; ++j) {
      while (tj == i || tj == i + 1) ++tj;
      m.inv[j] = m.circ_of_top(tj);
      m.inv[m.circ_of_top(tj)] = j;
      ++tj;
    }
    return m;
  }

  // cap_i : n -> (n-2), arc joining bottom points i, i+1.
  static Matching cap(int n, int i, int leftmost) {
    Matching m;
    m.nb = n;
    m.nt = n - 2;
    m.leftmost = leftmost;
    m.inv.assign(2 * n - 2, -1);
    m.inv[i] = i + 1;
    m.inv[i + 1] = i;
    int bj = 0;
    for (int j = 0; j < m.nt; ++j) {
      while (bj == i || bj == i + 1) ++bj;
      m.inv[bj] = m.circ_of_top(j);
      m.inv[m.circ_of_top(j)] = bj;
      ++bj;
    }
    return m;
  }

  bool is_identity() const {
    if (nb != nt) return false;
    for (int j = 0; j < nb; ++j)
      if (inv[j] != circ_of_top(j)) return false;
    return true;
  }

  Matching flipped() const {  // vertical flip: bottom <-> top
    Matching m;
    m.nb = nt;
    m.nt = nb;
    m.leftmost = leftmost;
    m.inv.assign(points(), -1);
    auto remap = [&](int i) {
      // old bottom j -> new top j; old top j -> new bottom j
      if (i < nb) return m.circ_of_top(i);
      return top_of_circ(i);
    };
    for (int i = 0; i < points(); ++i) {
      int a = remap(i), b = remap(inv[i]);
      m.inv[a] = b;
      m.inv[b] = a;
    }
    return m;
  }

  // Counterclockwise rotation by one strand of an (n,n) matching:
  // bottom_0 moves up the left side, top_{n-1} comes down the right side.
  Matching rotated_ccw() const {
    if (nb != nt) throw std::invalid_argument("rotation needs an endomorphism");
    Matching m;
    m.nb = nb;
    m.nt = nt;
    m.leftmost = 1 - leftmost;
    int N = points();
    m.inv.assign(N, -1);
    for (int i = 0; i < N; ++i) {
      int a = (i + N - 1) % N, b = (inv[i] + N - 1) % N;
      m.inv[a] = b;
      m.inv[b] = a;
    }
    return m;
  }

  Matching rotated_cw() const {
    if (nb != nt) throw std::invalid_argument("rotation needs an endomorphism");
    Matching m;
    m.nb = nb;
    m.nt = nt;
    m.leftmost = 1 - leftmost;
    int N = points();
    m.inv.assign(N, -1);
    for (int i = 0; i < N; ++i) {
      int a = (i + 1) % N, b = (inv[i] + 1) % N;
      m.inv[a] = b;
      m.inv[b] = a;
    }
    return m;
  }

  // Region counts by color: regions = arcs + 1; the region inside a chord of
  // nesting depth d has color leftmost ^ (d+1), the outer region leftmost.
  std::pair<int, int> region_counts() const {
    int count[2] = {0, 0};
    count[leftmost] += 1;  // outer region
    std::vector<int> stack;
    for (int i = 0; i < points(); ++i) {
      if (inv[i] > i) {
        count[(leftmost + static_cast<int>(stack.size()) + 1) % 2] += 1;
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != inv[i])
          throw std::logic_error("matching is not planar");
        stack.pop_back();
      }
    }
    return {count[0], count[1]};
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < points(); ++i) s += (inv[i] > i) ? '(' : ')';
    return s;
  }

  friend bool operator<(const Matching& a, const Matching& b) {
    return std::tie(a.nb, a.nt, a.leftmost, a.inv) < std::tie(b.nb, b.nt, b.leftmost, b.inv);
  }
  friend bool operator==(const Matching& a, const Matching& b) {
    return a.nb == b.nb && a.nt == b.nt && a.leftmost == b.leftmost && a.inv == b.inv;
  }
};

// All (n, m)-crossingless matchings with the given leftmost color.
inline std::vector<Matching> all_matchings(int n, int m, int leftmost) {
  if ((n + m) % 2 != 0)
    throw std::invalid_argument("matchings need n and m of the same parity");
  int N = n + m;
  std::vector<std::vector<int>> partials;
  std::vector<int> inv(N, -1);
  // Non-crossing involutions of the linear order 0..N-1 (the circular order
  // cut at the basepoint region).
  std::function<void(int)> rec = [&](int i) {
    while (i < N && inv[i] != -1) ++i;
    if (i >= N) {
      partials.push_back(inv);
      return;
    }
    for (int k = i + 1; k < N; k += 2) {
      if (inv[k] != -1) break;  // cannot jump over an unmatched point without crossing
      bool free_between = true;
      for (int j = i + 1; j < k; ++j)
        if (inv[j] != -1) { free_between = false; break; }
      if (!free_between) break;
      inv[i] = k;
      inv[k] = i;
      rec(i + 1);
      inv[i] = inv[k] = -1;
    }
  };
  rec(0);
  std::vector<Matching> out;
  for (auto& v : partials) {
    Matching m2;
    m2.nb = n;
    m2.nt = m;
    m2.leftmost = leftmost;
    m2.inv = v;
    out.push_back(std::move(m2));
  }
  return out;
}

// Coefficient context: the circle values -x_s and -x_t in the scalar type C.
template <typename C>
struct TLContext {
  C one;
  C minus_x[2];
};

inline TLContext<Frac> generic_tl_context() {
  const auto& qr = quantum_ring();
  return TLContext<Frac>{Frac::one(qr.ring()), {Frac(-qr.xs()), Frac(-qr.xt())}};
}

inline TLContext<Scalar> specialized_tl_context(const Scalar& xs, const Scalar& xt) {
  return TLContext<Scalar>{Scalar::one(xs.field()), {-xs, -xt}};
}

template <typename C>
class TLMorphism {
 public:
  int nb = 0, nt = 0, leftmost = 0;
  std::map<Matching, C> terms;

  static TLMorphism identity(int n, int leftmost, const TLContext<C>& ctx) {
    TLMorphism f;
    f.nb = f.nt = n;
    f.leftmost = leftmost;
    f.terms.emplace(Matching::identity(n, leftmost), ctx.one);
    return f;
  }

  static TLMorphism single(Matching m, C coeff) {
    TLMorphism f;
    f.nb = m.nb;
    f.nt = m.nt;
    f.leftmost = m.leftmost;
    if (!coeff.is_zero()) f.terms.emplace(std::move(m), std::move(coeff));
    return f;
  }

  bool is_zero() const { return terms.empty(); }

  C coefficient(const Matching& m, const TLContext<C>& ctx) const {
    auto it = terms.find(m);
    return it == terms.end() ? ctx.one - ctx.one : it->second;
  }

  C id_coefficient(const TLContext<C>& ctx) const {
    return coefficient(Matching::identity(nb, leftmost), ctx);
  }

  void add_term(Matching m, C coeff) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!coeff.is_zero()) terms.emplace(std::move(m), std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
    if (a.nb != b.nb || a.nt != b.nt || a.leftmost != b.leftmost)
      throw std::invalid_argument("TL sum: boundary mismatch");
    TLMorphism r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
  }

  friend TLMorphism operator-(const TLMorphism& a) {
    TLMorphism r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) { return a + (-b); }

  TLMorphism scaled(const C& k) const {
    TLMorphism r;
    r.nb = nb;
    r.nt = nt;
    r.leftmost = leftmost;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms) {
      C prod = c * k;
      if (!prod.is_zero()) r.terms.emplace(m, std::move(prod));
    }
    return r;
  }

  friend bool operator==(const TLMorphism& a, const TLMorphism& b) {
    if (a.nb != b.nb || a.nt != b.nt || a.leftmost != b.leftmost) return false;
    if (a.terms.size() != b.terms.size()) return false;
    auto it = a.terms.begin();
    auto jt = b.terms.begin();
    for (; it != a.terms.end(); ++it, ++jt)
      if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
  }

  // Append k identity strands on the right.
  TLMorphism widened(int k, const TLContext<C>&) const {
    TLMorphism r;
    r.nb = nb + k;
    r.nt = nt + k;
    r.leftmost = leftmost;
    for (const auto& [m, c] : terms) {
      Matching w;
      w.nb = m.nb + k;
      w.nt = m.nt + k;
      w.leftmost = m.leftmost;
      w.inv.assign(w.points(), -1);
      auto remap = [&](int i) {
        if (i < m.nb) return i;                          // bottom unchanged
        return w.circ_of_top(m.top_of_circ(i));          // top shifts
      };
      for (int i = 0; i < m.points(); ++i) {
        int a = remap(i), b = remap(m.inv[i]);
        w.inv[a] = b;
        w.inv[b] = a;
      }
      for (int j = 0; j < k; ++j) {
        int bot = m.nb + j, top = w.circ_of_top(m.nt + j);
        w.inv[bot] = top;
        w.inv[top] = bot;
      }
      r.terms.emplace(std::move(w), c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
      if (!out.empty()) out += "  +  ";
      out += "[" + m.to_string() + "] * " + c.to_string();
    }
    return out;
  }
};

// Single-matching composition; returns the glued matching and the product of
// circle values.
template <typename C>
std::pair<Matching, C> compose_matchings(const TLContext<C>& ctx, const Matching& f,
                                         const Matching& g) {
  if (g.nt != f.nb || g.leftmost != f.leftmost)
    throw std::invalid_argument("TL composition: boundary mismatch");
  const int A = g.nb, B = g.nt, Cc = f.nt;
  Matching r;
  r.nb = A;
  r.nt = Cc;
  r.leftmost = g.leftmost;
  r.inv.assign(A + Cc, -1);

  // Ports: result-bottom j: g circ j (j < A); result-top j: f circ B + ...
  // Walk from each result port through arcs and across the glue line.
  auto result_index_of_g = [&](int gi) -> int { return gi < A ? gi : -1; };
  auto result_index_of_f = [&](int fi) -> int {
    return fi >= B ? r.circ_of_top(f.top_of_circ(fi)) : -1;
  };

  std::vector<bool> glue_seen(B, false);
  C value = ctx.one;

  auto trace = [&](int start_diag, int start_idx) {
    // diag 0 = g, 1 = f; returns (diag, idx) of the far endpoint.
    int diag = start_diag, idx = start_idx;
    for (;;) {
      idx = (diag == 0) ? g.inv[idx] : f.inv[idx];
      if (diag == 0) {
        if (int ri = result_index_of_g(idx); ri >= 0) return std::pair<int, int>{diag, idx};
        int glue = g.top_of_circ(idx);
        glue_seen[glue] = true;
        diag = 1;
        idx = glue;  // f bottom index
      } else {
        if (int ri = result_index_of_f(idx); ri >= 0) return std::pair<int, int>{diag, idx};
        int glue = idx;  // f bottom index == glue index
        glue_seen[glue] = true;
        diag = 0;
        idx = g.circ_of_top(glue);
      }
    }
  };

  auto to_result = [&](int diag, int idx) {
    return diag == 0 ? result_index_of_g(idx) : result_index_of_f(idx);
  };

  for (int j = 0; j < A; ++j) {
    if (r.inv[j] != -1) continue;
    auto [d, i] = trace(0, j);
    int rj = to_result(d, i);
    r.inv[j] = rj;
    r.inv[rj] = j;
  }
  for (int j = 0; j < Cc; ++j) {
    int rt = r.circ_of_top(j);
    if (r.inv[rt] != -1) continue;
    auto [d, i] = trace(1, f.circ_of_top(j));
    int rj = to_result(d, i);
    r.inv[rt] = rj;
    r.inv[rj] = rt;
  }

  // Remaining glue points lie on circles: alternate f-arcs and g-arcs.
  std::vector<bool> on_circle(B, false);
  for (int gp = 0; gp < B; ++gp) {
    if (glue_seen[gp] || on_circle[gp]) continue;
    int min_gp = gp;
    int p = gp;
    do {
      on_circle[p] = true;
      int q = f.inv[p];  // arc inside f: glue -> glue
      if (q >= B) throw std::logic_error("circle trace left the glue line");
      on_circle[q] = true;
      min_gp = std::min(min_gp, std::min(p, q));
      int gi = g.inv[g.circ_of_top(q)];  // arc inside g: glue -> glue
      p = g.top_of_circ(gi);
    } while (p != gp);
    // Ambient region color: just left of the leftmost glue point on the circle.
    int color = (r.leftmost + min_gp) % 2;
    value = value * ctx.minus_x[color];
  }
  return {std::move(r), std::move(value)};
}

template <typename C>
TLMorphism<C> compose(const TLContext<C>& ctx, const TLMorphism<C>& f, const TLMorphism<C>& g) {
  if (g.nt != f.nb || g.leftmost != f.leftmost)
    throw std::invalid_argument("TL composition: boundary mismatch");
  TLMorphism<C> r;
  r.nb = g.nb;
  r.nt = f.nt;
  r.leftmost = g.leftmost;
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      auto [m, v] = compose_matchings(ctx, mf, mg);
      r.add_term(std::move(m), cf * cg * v);
    }
  return r;
}

// Partial trace: close the rightmost strand of an (n,n) endomorphism.
template <typename C>
TLMorphism<C> ptr(const TLContext<C>& ctx, const TLMorphism<C>& f) {
  if (f.nb != f.nt || f.nb < 1) throw std::invalid_argument("ptr needs an endomorphism, n >= 1");
  const int n = f.nb;
  TLMorphism<C> r;
  r.nb = r.nt = n - 1;
  r.leftmost = f.leftmost;
  for (const auto& [m, c] : f.terms) {
    int bot = n - 1;                 // circular index of bottom_{n-1}
    int top = m.circ_of_top(n - 1);  // circular index of top_{n-1}
    Matching w;
    w.nb = w.nt = n - 1;
    w.leftmost = m.leftmost;
    w.inv.assign(2 * (n - 1), -1);
    auto remap = [&](int i) {
      if (i < n - 1) return i;
      return w.circ_of_top(m.top_of_circ(i));
    };
    if (m.inv[bot] == top) {
      // Closing forms a circle around the rightmost region.
      int color = (m.leftmost + n - 1) % 2;
      C v = c * ctx.minus_x[color];
      for (int i = 0; i < m.points(); ++i) {
        if (i == bot || i == top || m.inv[i] < i) continue;
        int a = remap(i), b = remap(m.inv[i]);
        w.inv[a] = b;
        w.inv[b] = a;
      }
      r.add_term(std::move(w), std::move(v));
    } else {
      int a0 = m.inv[bot], b0 = m.inv[top];
      for (int i = 0; i < m.points(); ++i) {
        if (i == bot || i == top || m.inv[i] == bot || m.inv[i] == top) continue;
        if (m.inv[i] < i) continue;
        int a = remap(i), b = remap(m.inv[i]);
        w.inv[a] = b;
        w.inv[b] = a;
      }
      int a = remap(a0), b = remap(b0);
      w.inv[a] = b;
      w.inv[b] = a;
      r.add_term(std::move(w), c);
    }
  }
  return r;
}

template <typename C>
C ptr1(const TLContext<C>& ctx, const TLMorphism<C>& f) {
  return ptr(ctx, f).id_coefficient(ctx);
}

template <typename C>
TLMorphism<C> rotate_by_one_ccw(const TLMorphism<C>& f) {
  TLMorphism<C> r;
  r.nb = f.nb;
  r.nt = f.nt;
  r.leftmost = 1 - f.leftmost;
  for (const auto& [m, c] : f.terms) r.terms.emplace(m.rotated_ccw(), c);
  return r;
}

template <typename C>
TLMorphism<C> flip_vertical(const TLMorphism<C>& f) {
  TLMorphism<C> r;
  r.nb = f.nt;
  r.nt = f.nb;
  r.leftmost = f.leftmost;
  for (const auto& [m, c] : f.terms) r.terms.emplace(m.flipped(), c);
  return r;
}

// Killed by all caps on top and all cups on bottom, with identity coefficient 1.
template <typename C>
bool is_jones_wenzl(const TLContext<C>& ctx, const TLMorphism<C>& f) {
  if (f.nb != f.nt) return false;
  const int n = f.nb;
  if (!f.id_coefficient(ctx).is_one()) return false;
  for (int i = 0; i + 1 < n; ++i) {
    auto capm = TLMorphism<C>::single(Matching::cap(n, i, f.leftmost), ctx.one);
    if (!compose(ctx, capm, f).is_zero()) return false;
    auto cupm = TLMorphism<C>::single(Matching::cup(n, i, f.leftmost), ctx.one);
    if (!compose(ctx, f, cupm).is_zero()) return false;
  }
  return true;
}

// --- generic Jones-Wenzl projectors over QQ(x_s, x_t) ---

class GenericJW {
 public:
  static const TLMorphism<Frac>& get(int n, int leftmost) {
    static GenericJW inst;
    return inst.compute(n, leftmost);
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, TLMorphism<Frac>> memo_;

  const TLMorphism<Frac>& compute(int n, int leftmost) {
    std::lock_guard<std::mutex> lock(mu_);
    return compute_locked(n, leftmost);
  }

  const TLMorphism<Frac>& compute_locked(int n, int leftmost) {
    auto key = std::make_pair(n, leftmost);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    TLContext<Frac> ctx = generic_tl_context();
    TLMorphism<Frac> jw;
    if (n == 0) {
      jw = TLMorphism<Frac>::identity(0, leftmost, ctx);
    } else {
      // Built through the single-clasp expansion, which needs O(n Catalan(n))
      // compositions; the textbook recursion through the partial trace is
      // quadratic in Catalan(n) and is kept as a property-tested cross-check.
      jw = clasp_step(ctx, compute_locked(n - 1, leftmost), n - 1, leftmost);
    }
    auto [pos, ok] = memo_.emplace(key, std::move(jw));
    return pos->second;
  }

 public:
  // JW_{n+1} from JW_n by the single-clasp expansion.
  static TLMorphism<Frac> clasp_step(const TLContext<Frac>& ctx, const TLMorphism<Frac>& jw_n,
                                     int n, int leftmost) {
    TLMorphism<Frac> wide = jw_n.widened(1, ctx);
    if (n == 0) return wide;
    TLMorphism<Frac> acc = wide;
    int right = (leftmost + n + 1) % 2;  // rightmost region color on n+1 strands
    Frac denom = Frac(qnum(n + 1, right == 0 ? QColor::S : QColor::T));
    auto capn = TLMorphism<Frac>::single(Matching::cap(n + 1, n - 1, leftmost), ctx.one);
    TLMorphism<Frac> lower = compose(ctx, capn, wide);
    for (int a = 1; a <= n; ++a) {
      auto cupa = TLMorphism<Frac>::single(Matching::cup(n + 1, a - 1, leftmost), ctx.one);
      TLMorphism<Frac> term = compose(ctx, cupa, lower);
      int interior = (leftmost + a) % 2;  // the cup's interior region color
      Frac coeff = Frac(qnum(a, interior == 0 ? QColor::S : QColor::T)) / denom;
      acc = acc + term.scaled(coeff);
    }
    return acc;
  }

  // The partial-trace recursion, exposed for cross-checking:
  // JW_{n+1} = JW_n (+) 1 - ptr1(JW_n)^{-1} (JW_n (+) 1) e_n (JW_n (+) 1).
  static TLMorphism<Frac> recursion_step(const TLContext<Frac>& ctx, const TLMorphism<Frac>& jw_n,
                                         int n, int leftmost) {
    TLMorphism<Frac> wide = jw_n.widened(1, ctx);
    if (n == 0) return wide;
    Frac p1 = ptr1(ctx, jw_n);
    if (p1.is_zero()) throw std::logic_error("generic ptr1 vanished");
    auto e = TLMorphism<Frac>::single(
        compose_matchings(ctx, Matching::cup(n + 1, n - 1, leftmost),
                          Matching::cap(n + 1, n - 1, leftmost)).first,
        ctx.one);
    TLMorphism<Frac> mid = compose(ctx, wide, compose(ctx, e, wide));
    return wide - mid.scaled(p1.inverse());
  }
};

inline const TLMorphism<Frac>& jw_generic(int n, int leftmost) {
  return GenericJW::get(n, leftmost);
}

// Specialize the generic projector at x_s -> xs, x_t -> xt. Succeeds iff every
// reduced coefficient has a nonvanishing denominator there (and the rational
// coefficients land in the target field); by the lifting theorem this is
// exactly when JW_n exists over the target. A death-by-caps check in the
// target field backs up the reduction.
inline std::optional<TLMorphism<Scalar>> jw_specialize(const Scalar& xs, const Scalar& xt, int n,
                                                       int leftmost) {
  const TLMorphism<Frac>& gen = jw_generic(n, leftmost);
  auto hom = rational_hom(xs.field());
  TLMorphism<Scalar> out;
  out.nb = out.nt = n;
  out.leftmost = leftmost;
  try {
    for (const auto& [m, c] : gen.terms) {
      Scalar v = c.specialize({xs, xt}, hom);
      if (!v.is_zero()) out.terms.emplace(m, std::move(v));
    }
  } catch (const std::domain_error&) {
    return std::nullopt;  // JW does not exist at this specialization
  }
  TLContext<Scalar> ctx = specialized_tl_context(xs, xt);
  if (!is_jones_wenzl(ctx, out))
    throw std::logic_error("specialized projector failed the death-by-caps check");
  return out;
}

// Rotatability at a specialization: both partial traces vanish identically.
// Throws when the projector itself does not exist (a different failure).
inline bool is_rotatable(const Scalar& xs, const Scalar& xt, int n) {
  TLContext<Scalar> ctx = specialized_tl_context(xs, xt);
  for (int leftmost : {0, 1}) {
    auto jw = jw_specialize(xs, xt, n, leftmost);
    if (!jw) throw std::domain_error("JW_n does not exist at this specialization");
    if (!ptr(ctx, *jw).is_zero()) return false;
  }
  return true;
}

// The rotation eigenvalue of a rotatable projector: asserts that the
// counterclockwise rotation of JW_{n, leftmost s} is [n] (in the matching
// color) times the other-colored projector, and returns that scalar.
inline Scalar rotation_eigenvalue(const Scalar& xs, const Scalar& xt, int n) {
  if (!is_rotatable(xs, xt, n))
    throw std::domain_error("rotation eigenvalue needs a rotatable projector");
  auto jw_s = jw_specialize(xs, xt, n, 0);
  auto jw_t = jw_specialize(xs, xt, n, 1);
  QColor right = (n % 2 == 0) ? QColor::S : QColor::T;
  Scalar ev = qspecialize(qnum(n, other(right)), xs, xt);
  if (!(rotate_by_one_ccw(*jw_s) == jw_t->scaled(ev)))
    throw std::logic_error("rotation did not produce the expected eigenvalue");
  return ev;
}

// poly(f): sum over matchings of coeff * alpha_s^{#s-regions} alpha_t^{#t-regions},
// in the realization's polynomial ring, for the colored pair (s, t).
inline Poly tl_poly_eval(const TLMorphism<Scalar>& f, const Realization& r, int s, int t) {
  Poly acc = Poly::zero(r.ring());
  Poly as = Poly::variable(r.ring(), s), at = Poly::variable(r.ring(), t);
  for (const auto& [m, c] : f.terms) {
    auto [ns, ntc] = m.region_counts();  // counts for color 0 (=s-side), color 1
    Poly mono = as.pow(ns) * at.pow(ntc) * c;
    acc = acc + mono;
  }
  return acc;
}

// Single-clasp expansion of JW_{n+1} from JW_n (generic).
inline TLMorphism<Frac> single_clasp_expand(int n, int leftmost) {
  TLContext<Frac> ctx = generic_tl_context();
  return GenericJW::clasp_step(ctx, jw_generic(n, leftmost), n, leftmost);
}

// The partial-trace recursion for JW_{n+1} from JW_n (generic); the clasp
// construction above must agree with it.
inline TLMorphism<Frac> jw_recursion_expand(int n, int leftmost) {
  TLContext<Frac> ctx = generic_tl_context();
  return GenericJW::recursion_step(ctx, jw_generic(n, leftmost), n, leftmost);
}

}  // namespace heckeloc
