#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckeloc {

// Coxeter systems, expressions, subexpressions and the word problem.
// Element equality goes through Tits' theorem: a word is reduced iff no word
// in its braid-move orbit contains an adjacent equal pair, and two reduced
// words represent the same element iff they lie in the same braid orbit.
// The canonical representative of an element is the lexicographically least
// reduced word in the orbit.

using CoxWord = std::vector<std::uint8_t>;

struct CoxeterSystem {
  int rank = 0;
  // m[s][t]: order of st; m[s][s] = 1; 0 encodes infinity.
  std::vector<std::vector<int>> m;

  CoxeterSystem() = default;
  CoxeterSystem(int rank_, std::vector<std::vector<int>> m_) : rank(rank_), m(std::move(m_)) {
    if (static_cast<int>(m.size()) != rank) throw std::invalid_argument("coxeter matrix size");
    for (int s = 0; s < rank; ++s) {
      if (static_cast<int>(m[s].size()) != rank) throw std::invalid_argument("coxeter matrix size");
      if (m[s][s] != 1) throw std::invalid_argument("coxeter matrix: m_ss must be 1");
      for (int t = 0; t < rank; ++t) {
        if (m[s][t] != m[t][s]) throw std::invalid_argument("coxeter matrix must be symmetric");
        if (s != t && m[s][t] == 1) throw std::invalid_argument("coxeter matrix: m_st >= 2 for s != t");
      }
    }
  }

  int order(int s, int t) const { return m[s][t]; }
};

inline CoxWord alternating_word(int first, int second, int length) {
  CoxWord w;
  w.reserve(length);
  for (int i = 0; i < length; ++i)
    w.push_back(static_cast<std::uint8_t>(i % 2 == 0 ? first : second));
  return w;
}

struct Subexpression {
  std::vector<std::uint8_t> bits;  // bits[i] in {0,1}, e_1 first

  std::string to_string() const {
    std::string s;
    for (auto b : bits) s += b ? '1' : '0';
    return s;
  }
};

// Canonical-order index of a subexpression: e_1 most significant, 0 < 1.
inline std::size_t sub_index(const Subexpression& e) {
  std::size_t v = 0;
  for (auto b : e.bits) v = (v << 1) | b;
  return v;
}

inline Subexpression sub_of_index(std::size_t idx, std::size_t len) {
  Subexpression e;
  e.bits.resize(len);
  for (std::size_t i = 0; i < len; ++i)
    e.bits[i] = (idx >> (len - 1 - i)) & 1;
  return e;
}

struct Element {
  CoxWord rep;  // canonical reduced word
  friend bool operator==(const Element& a, const Element& b) { return a.rep == b.rep; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) { return a.rep < b.rep; }
  bool is_identity() const { return rep.empty(); }
  std::size_t length() const { return rep.size(); }
};

// Word-problem context for one Coxeter system: canonicalization with
// memoization. All public operations are pure functions of their inputs;
// the cache is guarded, so concurrent use is safe.
class WordCtx {
 public:
  explicit WordCtx(CoxeterSystem cs) : cs_(std::move(cs)) {}

  const CoxeterSystem& system() const { return cs_; }

  CoxWord reduce(const CoxWord& w) const { return canonical(w).rep; }

  Element canonical(const CoxWord& w) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = canon_.find(w);
      if (it != canon_.end()) return Element{it->second};
    }
    CoxWord c = canonical_uncached(w);
    std::lock_guard<std::mutex> lock(mu_);
    canon_.emplace(w, c);
    return Element{c};
  }

  bool elements_equal(const CoxWord& a, const CoxWord& b) const {
    return canonical(a) == canonical(b);
  }

  Element identity() const { return Element{}; }

  Element mult(const Element& a, int letter) const {
    std::pair<CoxWord, int> key{a.rep, letter};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = mult_.find(key);
      if (it != mult_.end()) return Element{it->second};
    }
    CoxWord w = a.rep;
    w.push_back(static_cast<std::uint8_t>(letter));
    Element r = canonical(w);
    std::lock_guard<std::mutex> lock(mu_);
    mult_.emplace(std::move(key), r.rep);
    return r;
  }

  Element endpoint(const CoxWord& w, const Subexpression& e) const {
    if (w.size() != e.bits.size())
      throw std::invalid_argument("endpoint: word and subexpression lengths differ");
    Element x = identity();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (e.bits[i]) x = mult(x, w[i]);
    return x;
  }

  // Endpoints of every subexpression of w, indexed canonically.
  std::vector<Element> all_endpoints(const CoxWord& w) const {
    std::vector<Element> cur{identity()};
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<Element> next(cur.size() * 2);
      for (std::size_t p = 0; p < cur.size(); ++p) {
        next[2 * p] = cur[p];
        next[2 * p + 1] = mult(cur[p], w[i]);
      }
      cur = std::move(next);
    }
    return cur;
  }

  std::vector<Subexpression> subexpressions_with_endpoint(const CoxWord& w, const Element& x) const {
    std::vector<Subexpression> out;
    auto eps = all_endpoints(w);
    for (std::size_t idx = 0; idx < eps.size(); ++idx)
      if (eps[idx] == x) out.push_back(sub_of_index(idx, w.size()));
    return out;
  }

 private:
  CoxeterSystem cs_;
  mutable std::mutex mu_;
  mutable std::map<CoxWord, CoxWord> canon_;
  mutable std::map<std::pair<CoxWord, int>, CoxWord> mult_;

  // Full braid-move orbit of w (words of the same length).
  std::set<CoxWord> braid_orbit(const CoxWord& w) const {
    std::set<CoxWord> seen{w};
    std::vector<CoxWord> queue{w};
    while (!queue.empty()) {
      CoxWord cur = queue.back();
      queue.pop_back();
      for (std::size_t pos = 0; pos < cur.size(); ++pos) {
        if (pos + 1 >= cur.size()) continue;
        int s = cur[pos], t = cur[pos + 1];
        if (s == t) continue;
        int ord = cs_.m[s][t];
        if (ord == 0 || pos + ord > cur.size()) continue;
        bool match = true;
        for (int i = 0; i < ord; ++i)
          if (cur[pos + i] != (i % 2 == 0 ? s : t)) { match = false; break; }
        if (!match) continue;
        CoxWord next = cur;
        for (int i = 0; i < ord; ++i)
          next[pos + i] = static_cast<std::uint8_t>(i % 2 == 0 ? t : s);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    return seen;
  }

  CoxWord canonical_uncached(const CoxWord& w) const {
    CoxWord cur = w;
    for (;;) {
      std::set<CoxWord> orbit = braid_orbit(cur);
      bool shortened = false;
      for (const CoxWord& cand : orbit) {
        for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
          if (cand[i] == cand[i + 1]) {
            CoxWord shorter;
            shorter.reserve(cand.size() - 2);
            shorter.insert(shorter.end(), cand.begin(), cand.begin() + i);
            shorter.insert(shorter.end(), cand.begin() + i + 2, cand.end());
            cur = std::move(shorter);
            shortened = true;
            break;
          }
        }
        if (shortened) break;
      }
      if (!shortened) return *orbit.begin();  // lexicographically least reduced word
    }
  }
};

// Leading subexpressions X_x = {(s_1), (s_1,s_2), ..., x}.
inline std::vector<CoxWord> leading_subexpressions(const CoxWord& x) {
  if (x.empty()) throw std::invalid_argument("leading subexpressions of the empty word");
  std::vector<CoxWord> out;
  for (std::size_t len = 1; len <= x.size(); ++len)
    out.emplace_back(x.begin(), x.begin() + len);
  return out;
}

}  // namespace heckeloc
