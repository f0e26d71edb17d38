#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "heckeloc/realization.hpp"

namespace heckeloc {

// The additive envelope of the Q-groupoid: objects are subexpression-labeled
// direct sums of r_x, morphisms are sparse matrices of fractions. An entry at
// (row, col) may be nonzero only when the two labels have the same endpoint;
// storing anything else is a constructor error.

struct SumObject {
  std::shared_ptr<WordCtx> ctx;
  CoxWord word;
  std::vector<Element> endpoints;            // per label, canonical order
  std::vector<int> cls;                      // endpoint class id per label
  std::vector<std::vector<std::uint32_t>> classes;  // labels per class id

  std::size_t size() const { return endpoints.size(); }

  static std::shared_ptr<const SumObject> make(std::shared_ptr<WordCtx> ctx, CoxWord word) {
    auto obj = std::make_shared<SumObject>();
    obj->ctx = std::move(ctx);
    obj->word = std::move(word);
    obj->endpoints = obj->ctx->all_endpoints(obj->word);
    std::map<CoxWord, int> ids;
    for (std::size_t i = 0; i < obj->endpoints.size(); ++i) {
      auto [it, fresh] = ids.emplace(obj->endpoints[i].rep, static_cast<int>(obj->classes.size()));
      if (fresh) obj->classes.emplace_back();
      obj->cls.push_back(it->second);
      obj->classes[it->second].push_back(static_cast<std::uint32_t>(i));
    }
    return obj;
  }
};
using ObjPtr = std::shared_ptr<const SumObject>;

class LocMatrix {
 public:
  LocMatrix() = default;
  LocMatrix(ObjPtr src, ObjPtr tgt, RingPtr ring)
      : src_(std::move(src)), tgt_(std::move(tgt)), ring_(std::move(ring)) {}

  const ObjPtr& src() const { return src_; }
  const ObjPtr& tgt() const { return tgt_; }
  const RingPtr& ring() const { return ring_; }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, Frac>& entries() const { return e_; }

  static LocMatrix identity(const ObjPtr& obj, const RingPtr& ring) {
    LocMatrix m(obj, obj, ring);
    Frac one = Frac::one(ring);
    for (std::uint32_t i = 0; i < obj->size(); ++i) m.e_.emplace(std::make_pair(i, i), one);
    return m;
  }

  static LocMatrix zero(ObjPtr src, ObjPtr tgt, RingPtr ring) {
    return LocMatrix(std::move(src), std::move(tgt), std::move(ring));
  }

  void set(std::uint32_t row, std::uint32_t col, Frac value) {
    if (row >= tgt_->size() || col >= src_->size())
      throw std::out_of_range("matrix entry out of range");
    if (value.is_zero()) return;
    if (!(tgt_->endpoints[row] == src_->endpoints[col]))
      throw std::logic_error("endpoint guard: entry between summands with different endpoints");
    e_[{row, col}] = std::move(value);
  }

  Frac at(std::uint32_t row, std::uint32_t col) const {
    auto it = e_.find({row, col});
    return it == e_.end() ? Frac::zero(ring_) : it->second;
  }

  bool is_zero() const { return e_.empty(); }

  friend LocMatrix operator+(const LocMatrix& a, const LocMatrix& b) {
    a.check_same_shape(b);
    LocMatrix r = a;
    for (const auto& [rc, v] : b.e_) {
      auto it = r.e_.find(rc);
      if (it == r.e_.end()) r.e_.emplace(rc, v);
      else {
        it->second = it->second + v;
        if (it->second.is_zero()) r.e_.erase(it);
      }
    }
    return r;
  }

  friend LocMatrix operator-(const LocMatrix& a) {
    LocMatrix r = a;
    for (auto& [rc, v] : r.e_) v = -v;
    return r;
  }
  friend LocMatrix operator-(const LocMatrix& a, const LocMatrix& b) { return a + (-b); }

  LocMatrix scaled(const Frac& k) const {
    LocMatrix r(src_, tgt_, ring_);
    if (k.is_zero()) return r;
    for (const auto& [rc, v] : e_) {
      Frac prod = v * k;
      if (!prod.is_zero()) r.e_.emplace(rc, std::move(prod));
    }
    return r;
  }

  friend bool operator==(const LocMatrix& a, const LocMatrix& b) {
    a.check_same_shape(b);
    // Entrywise cross-multiplied equality; absent entries are zero.
    for (const auto& [rc, v] : a.e_) {
      auto it = b.e_.find(rc);
      if (it == b.e_.end()) { if (!v.is_zero()) return false; }
      else if (v != it->second) return false;
    }
    for (const auto& [rc, v] : b.e_)
      if (!a.e_.count(rc) && !v.is_zero()) return false;
    return true;
  }
  friend bool operator!=(const LocMatrix& a, const LocMatrix& b) { return !(a == b); }

  // Matrix composition a(this) after b: (a o b)(x) = a(b(x)).
  friend LocMatrix compose(const LocMatrix& a, const LocMatrix& b) {
    if (a.src_->word != b.tgt_->word) {
      std::string msg = "compose: object mismatch: |a.src|=" + std::to_string(a.src_->word.size()) +
                        " |b.tgt|=" + std::to_string(b.tgt_->word.size());
      throw std::invalid_argument(msg);
    }
    LocMatrix r(b.src_, a.tgt_, a.ring_);
    // Index a's entries by column.
    std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, const Frac*>>> by_col;
    for (const auto& [rc, v] : a.e_) by_col[rc.second].emplace_back(rc.first, &v);
    std::map<std::pair<std::uint32_t, std::uint32_t>, Frac> acc;
    for (const auto& [rc, v] : b.e_) {
      auto it = by_col.find(rc.first);
      if (it == by_col.end()) continue;
      for (const auto& [row, av] : it->second) {
        auto key = std::make_pair(row, rc.second);
        auto jt = acc.find(key);
        Frac prod = *av * v;
        if (jt == acc.end()) acc.emplace(key, std::move(prod));
        else jt->second = jt->second + prod;
      }
    }
    for (auto& [rc, v] : acc)
      if (!v.is_zero()) r.set(rc.first, rc.second, std::move(v));
    return r;
  }

  // Monoidal product: labels concatenate, and the right factor's entry is
  // twisted by the left factor's endpoint (f tensor g = f . x(g)).
  friend LocMatrix tensor(const Realization& real, const LocMatrix& a, const LocMatrix& b) {
    CoxWord sw = a.src_->word, tw = a.tgt_->word;
    sw.insert(sw.end(), b.src_->word.begin(), b.src_->word.end());
    tw.insert(tw.end(), b.tgt_->word.begin(), b.tgt_->word.end());
    auto cache = object_cache(real);
    LocMatrix r(cache(sw), cache(tw), a.ring_);
    const std::size_t bs = b.src_->size(), bt = b.tgt_->size();
    // Group b's twisted copies by the twisting element to avoid recomputation.
    std::map<CoxWord, std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Frac>>> twisted;
    for (const auto& [rc1, v1] : a.e_) {
      const Element& w = a.tgt_->endpoints[rc1.first];
      auto it = twisted.find(w.rep);
      if (it == twisted.end()) {
        std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Frac>> list;
        for (const auto& [rc2, v2] : b.e_)
          list.emplace_back(rc2, real.act_on_frac(w.rep, v2));
        it = twisted.emplace(w.rep, std::move(list)).first;
      }
      for (const auto& [rc2, v2] : it->second) {
        Frac prod = v1 * v2;
        if (prod.is_zero()) continue;
        // Endpoint guard re-enforced by set().
        r.set(rc1.first * bt + rc2.first, rc1.second * bs + rc2.second, std::move(prod));
      }
    }
    return r;
  }

  // Interned sum objects per realization (labels and endpoints are pure
  // functions of the word).
  static std::function<ObjPtr(const CoxWord&)> object_cache(const Realization& real);

  // Every entry homogeneous of graded degree = morphism_degree + |src| - |tgt|.
  bool degree_check(long long morphism_degree) const {
    long long want = morphism_degree + static_cast<long long>(src_->word.size()) -
                     static_cast<long long>(tgt_->word.size());
    for (const auto& [rc, v] : e_) {
      auto d = v.graded_degree();
      if (!d || *d != want) return false;
    }
    return true;
  }

  std::string render_dense() const {
    std::ostringstream out;
    out << "[";
    for (std::uint32_t i = 0; i < tgt_->size(); ++i) {
      if (i) out << ",\n ";
      out << "[";
      for (std::uint32_t j = 0; j < src_->size(); ++j) {
        if (j) out << ", ";
        out << at(i, j).to_string();
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

 private:
  ObjPtr src_, tgt_;
  RingPtr ring_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Frac> e_;

  void check_same_shape(const LocMatrix& o) const {
    if (src_->word != o.src_->word || tgt_->word != o.tgt_->word)
      throw std::invalid_argument("matrix operation: object mismatch");
  }
};

namespace detail_obj {
struct ObjectCache {
  std::mutex mu;
  std::map<CoxWord, ObjPtr> cache;
};
}  // namespace detail_obj

inline std::function<ObjPtr(const CoxWord&)> LocMatrix::object_cache(const Realization& real) {
  // One cache per WordCtx; the key keeps its context alive so addresses
  // cannot recycle.
  static std::mutex table_mu;
  static std::map<std::shared_ptr<WordCtx>, std::shared_ptr<detail_obj::ObjectCache>> table;
  std::shared_ptr<detail_obj::ObjectCache> entry;
  {
    std::lock_guard<std::mutex> lock(table_mu);
    auto& slot = table[real.words()];
    if (!slot) slot = std::make_shared<detail_obj::ObjectCache>();
    entry = slot;
  }
  auto ctx = real.words();
  return [entry, ctx](const CoxWord& w) -> ObjPtr {
    std::lock_guard<std::mutex> lock(entry->mu);
    auto it = entry->cache.find(w);
    if (it != entry->cache.end()) return it->second;
    ObjPtr obj = SumObject::make(ctx, w);
    entry->cache.emplace(w, obj);
    return obj;
  };
}

}  // namespace heckeloc
