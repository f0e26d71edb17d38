#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeloc/field.hpp"

namespace heckeloc {

// Sparse multivariate polynomials over a coefficient field, and their
// fraction field. Monomials are ordered graded-lexicographically in the fixed
// variable order; maps iterate from the leading term down, which makes
// printing and serialization deterministic.

struct PolyRing {
  FieldPtr field;
  std::vector<std::string> vars;

  static std::shared_ptr<const PolyRing> make(FieldPtr f, std::vector<std::string> vars) {
    auto r = std::make_shared<PolyRing>();
    r->field = std::move(f);
    r->vars = std::move(vars);
    return r;
  }
};
using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const PolyRing& a, const PolyRing& b) {
  return a.vars == b.vars && same_field(*a.field, *b.field);
}

using Mono = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Mono& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    std::uint64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors, first variable dominant
  }
};

class Poly {
 public:
  using TermMap = std::map<Mono, Scalar, GrlexGreater>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr ring, Scalar c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.emplace(Mono(ring->vars.size(), 0), std::move(c));
    return p;
  }

  static Poly from_int(RingPtr ring, long long n) {
    return constant(ring, Scalar::from_int(ring->field, n));
  }

  static Poly variable(RingPtr ring, std::size_t i) {
    if (i >= ring->vars.size()) throw std::out_of_range("variable index");
    Poly p(ring);
    Mono m(ring->vars.size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), Scalar::one(ring->field));
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }

  Scalar constant_value() const {
    if (terms_.empty()) return Scalar::zero(ring_->field);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  std::uint64_t total_degree() const {
    if (terms_.empty()) return 0;
    return mono_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = mono_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }

  const Scalar& leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
    return terms_.begin()->second;
  }

  Scalar coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
  }

  void set_coeff(Mono m, Scalar c) {
    if (c.is_zero()) terms_.erase(m);
    else terms_[std::move(m)] = std::move(c);
  }

  friend Poly operator-(const Poly& a) {
    Poly r(a.ring_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) r.terms_.emplace(m, c);
      else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        Scalar prod = ca * cb;
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          if (!prod.is_zero()) r.terms_.emplace(std::move(m), std::move(prod));
        } else {
          it->second = it->second + prod;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    return r;
  }

  friend Poly operator*(const Poly& a, const Scalar& c) {
    Poly r(a.ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : a.terms_) {
      Scalar prod = t * c;
      if (!prod.is_zero()) r.terms_.emplace(m, std::move(prod));
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    a.check(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
      if (it->first != jt->first || it->second != jt->second) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(std::uint32_t e) const {
    Poly r = from_int(ring_, 1);
    Poly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Ring-homomorphic evaluation: every variable assigned a value in the target
  // field; coefficients carried across by `hom`.
  Scalar specialize(const std::vector<Scalar>& values,
                    const std::function<Scalar(const Scalar&)>& hom) const {
    if (values.size() != ring_->vars.size())
      throw std::invalid_argument("specialize: every variable must be assigned");
    const FieldPtr target = values.empty() ? ring_->field : values[0].field();
    Scalar acc = Scalar::zero(target);
    for (const auto& [m, c] : terms_) {
      Scalar t = hom(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint32_t k = 0; k < m[i]; ++k) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  }

  // Substitute each variable by a polynomial (algebra endomorphism).
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != ring_->vars.size())
      throw std::invalid_argument("substitute: image required for each variable");
    Poly acc = Poly::zero(ring_);
    for (const auto& [m, c] : terms_) {
      Poly t = Poly::constant(ring_, c);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) t = t * images[i].pow(m[i]);
      acc = acc + t;
    }
    return acc;
  }

  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  // Coefficient of var^k, a polynomial not involving `var`.
  Poly coeff_in(std::size_t var, std::uint32_t k) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_)
      if (m[var] == k) {
        Mono mm = m;
        mm[var] = 0;
        r.terms_.emplace(std::move(mm), c);
      }
    return r;
  }

  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;

  void check(const Poly& o) const {
    if (ring_ != o.ring_ && !same_ring(*ring_, *o.ring_))
      throw std::invalid_argument("polynomial operation across different rings");
  }

  friend class PolyDiv;
};

// --- exact division, gcd ---

class PolyDiv {
 public:
  // Quotient a/b when b divides a exactly; nullopt otherwise.
  static std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    Poly rem = a;
    Poly q(a.ring());
    const Mono& lmb = b.terms().begin()->first;
    const Scalar& lcb = b.terms().begin()->second;
    while (!rem.is_zero()) {
      const Mono& lmr = rem.terms().begin()->first;
      Mono t(lmr.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (lmr[i] < lmb[i]) return std::nullopt;
        t[i] = lmr[i] - lmb[i];
      }
      Scalar c = rem.terms().begin()->second / lcb;
      Poly tp(a.ring());
      tp.terms_.emplace(std::move(t), std::move(c));
      q = q + tp;
      rem = rem - tp * b;
    }
    return q;
  }

  // Multivariate gcd, normalized so the leading coefficient is 1.
  // Recursive content/primitive-part Euclid: view the polynomial as univariate
  // in the last relevant variable over the remaining ones; primitive
  // pseudo-remainder sequence there; recurse on contents.
  static Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a == b) return normalize(a);
    Poly g = gcd_inner(a, b, top_var(a, b));
    return normalize(g);
  }

  static Poly normalize(const Poly& p) {
    if (p.is_zero()) return p;
    Scalar inv = p.leading_coeff().inverse();
    return p * inv;
  }

 private:
  static int top_var(const Poly& a, const Poly& b) {
    int n = static_cast<int>(a.ring()->vars.size());
    for (int v = n - 1; v >= 0; --v)
      if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;  // both constant
  }

  static Poly gcd_inner(const Poly& a, const Poly& b, int var) {
    if (var < 0) return Poly::from_int(a.ring(), 1);  // nonzero constants

    Poly ca = content(a, var), cb = content(b, var);
    Poly pa = *exact_div(a, ca), pb = *exact_div(b, cb);

    // Primitive PRS in (coefficients)[x_var].
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
      Poly r = prem(pa, pb, var);
      pa = pb;
      if (r.is_zero()) { pb = r; break; }
      pb = *exact_div(r, content(r, var));
    }
    Poly cg = gcd(ca, cb);
    Poly pg = *exact_div(pa, content(pa, var));
    return cg * pg;
  }

  // Content of p with respect to variable `var`: gcd of its coefficients.
  static Poly content(const Poly& p, int var) {
    Poly c(p.ring());
    for (std::uint32_t k = 0; k <= p.degree_in(var); ++k) {
      Poly ck = p.coeff_in(var, k);
      if (ck.is_zero()) continue;
      c = c.is_zero() ? ck : gcd(c, ck);
      if (c.is_constant()) break;
    }
    return normalize(c);
  }

  // Pseudo-remainder of a by b with respect to `var`.
  static Poly prem(Poly a, const Poly& b, int var) {
    std::uint32_t db = b.degree_in(var);
    Poly lcb = b.coeff_in(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
      std::uint32_t da = a.degree_in(var);
      Poly lca = a.coeff_in(var, da);
      Poly shift = Poly::variable(a.ring(), var).pow(da - db);
      a = a * lcb - lca * shift * b;
    }
    return a;
  }
};

inline std::optional<Poly> poly_exact_div(const Poly& a, const Poly& b) {
  return PolyDiv::exact_div(a, b);
}
inline Poly poly_gcd(const Poly& a, const Poly& b) { return PolyDiv::gcd(a, b); }

// --- the fraction field ---

class Frac {
 public:
  Frac() = default;
  explicit Frac(Poly num) : num_(std::move(num)), den_(Poly::from_int(num_.ring(), 1)) {}

  Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    reduce();
  }

  static Frac zero(RingPtr ring) { return Frac(Poly::zero(ring)); }
  static Frac one(RingPtr ring) { return Frac(Poly::from_int(ring, 1)); }
  static Frac from_int(RingPtr ring, long long n) { return Frac(Poly::from_int(ring, n)); }
  static Frac constant(RingPtr ring, const Scalar& c) { return Frac(Poly::constant(ring, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  bool is_one() const {
    return den_.is_constant() && !num_.is_zero() && num_ == den_;
  }

  friend Frac operator-(const Frac& a) { return Frac::raw(-a.num_, a.den_); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac::zero(a.ring());
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_zero()) throw std::domain_error("division by zero fraction");
    return Frac(a.num_ * b.den_, a.den_ * b.num_);
  }

  // Equality by cross-multiplication; immune to any normalization gaps.
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  Frac inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero fraction");
    return Frac(den_, num_);
  }

  // Graded degree with deg(variable) = 2; requires homogeneous num and den.
  std::optional<long long> graded_degree() const {
    if (is_zero()) return std::nullopt;
    if (!num_.is_homogeneous() || !den_.is_homogeneous()) return std::nullopt;
    return 2 * static_cast<long long>(num_.total_degree()) -
           2 * static_cast<long long>(den_.total_degree());
  }

  Scalar specialize(const std::vector<Scalar>& values,
                    const std::function<Scalar(const Scalar&)>& hom) const {
    Scalar d = den_.specialize(values, hom);
    if (d.is_zero()) throw std::domain_error("fraction denominator vanishes at specialization");
    return num_.specialize(values, hom) / d;
  }

  std::string to_string() const;

  // Bypasses reduction; only for already-normalized data.
  static Frac raw(Poly num, Poly den) {
    Frac f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
  }

 private:
  Poly num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly::from_int(num_.ring(), 1);
      return;
    }
    if (!den_.is_constant()) {
      if (den_.terms().size() == 1) {
        // Monomial denominator: cancel the common monomial factor directly.
        cancel_monomial();
      } else if (auto q = poly_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = Poly::from_int(num_.ring(), 1);
      } else {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
          num_ = *poly_exact_div(num_, g);
          den_ = *poly_exact_div(den_, g);
        }
      }
    }
    // Leading coefficient of the denominator becomes 1.
    Scalar lc = den_.leading_coeff();
    if (!lc.is_one()) {
      Scalar inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  void cancel_monomial() {
    const Mono& dm = den_.terms().begin()->first;
    Mono common = dm;
    for (const auto& [m, c] : num_.terms()) {
      for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], m[i]);
      if (mono_degree(common) == 0) return;
    }
    auto strip = [&](const Poly& p) {
      Poly q(p.ring());
      for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        for (std::size_t i = 0; i < mm.size(); ++i) mm[i] -= common[i];
        q.set_coeff(std::move(mm), c);
      }
      return q;
    };
    num_ = strip(num_);
    den_ = strip(den_);
  }
};

inline Frac frac_reduce(const Frac& f) { return Frac(f.num(), f.den()); }
inline bool frac_eq(const Frac& a, const Frac& b) { return a == b; }

// --- rendering ---

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Scalar neg = -c;
    std::string cs;
    bool negative = false;
    if (c.is_one()) cs = "";
    else if (neg.is_one()) { cs = ""; negative = true; }
    else {
      cs = c.to_string();
      if (!cs.empty() && cs[0] == '-' && !c.needs_parens()) {
        negative = true;
        cs = cs.substr(1);
      }
      if (c.needs_parens()) cs = "(" + cs + ")";
    }
    std::string term;
    if (mono.empty()) term = cs.empty() ? "1" : cs;
    else if (cs.empty()) term = mono;
    else term = cs + "*" + mono;
    if (first) out << (negative ? "-" : "") << term;
    else out << (negative ? " - " : " + ") << term;
    first = false;
  }
  return out.str();
}

inline std::string Frac::to_string() const {
  if (num_.is_zero()) return "0";
  std::string n = num_.to_string();
  if (den_.is_constant() && den_.leading_coeff().is_one()) return n;
  std::string d = den_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

// Carries rational coefficients into an arbitrary target field.
inline std::function<Scalar(const Scalar&)> rational_hom(FieldPtr target) {
  return [target](const Scalar& c) { return Scalar::from_rat(target, c.as_rational()); };
}

inline std::function<Scalar(const Scalar&)> identity_hom() {
  return [](const Scalar& c) { return c; };
}

}  // namespace heckeloc
