#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeloc/rational.hpp"

namespace heckeloc {

// Exact coefficient fields. A Scalar is self-describing: it carries a pointer
// to its field, so binary operations can check compatibility at runtime.
// Supported fields:
//   Rationals                 -- arbitrary-precision QQ
//   Prime(p)                  -- F_p, p prime
//   Number(modulus, var)      -- QQ[x]/(modulus), modulus monic of degree >= 1
//   RatFunc(base, var)        -- fraction field of base[var]
//
// Number-field moduli are assumed irreducible; this is the caller's
// responsibility and is not checked.

enum class FieldKind { Rationals, Prime, Number, RatFunc };

struct FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

struct FieldDesc {
  FieldKind kind;
  std::uint64_t p = 0;        // Prime
  std::vector<Rat> modulus;   // Number: ascending coefficients, monic
  std::string var;            // Number / RatFunc
  FieldPtr base;              // RatFunc

  static FieldPtr rationals() {
    static FieldPtr q = std::make_shared<FieldDesc>(FieldDesc{FieldKind::Rationals});
    return q;
  }

  static FieldPtr prime(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("prime field: p must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("prime field: p is not prime");
    auto f = std::make_shared<FieldDesc>();
    f->kind = FieldKind::Prime;
    f->p = p;
    return f;
  }

  static FieldPtr number(std::vector<Rat> modulus, std::string var) {
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw std::invalid_argument("number field: modulus degree must be >= 1");
    if (modulus.back() != 1) throw std::invalid_argument("number field: modulus must be monic");
    auto f = std::make_shared<FieldDesc>();
    f->kind = FieldKind::Number;
    f->modulus = std::move(modulus);
    f->var = std::move(var);
    return f;
  }

  static FieldPtr ratfunc(FieldPtr base, std::string var) {
    auto f = std::make_shared<FieldDesc>();
    f->kind = FieldKind::RatFunc;
    f->base = std::move(base);
    f->var = std::move(var);
    return f;
  }

  std::size_t degree() const { return modulus.size() - 1; }
};

inline bool same_field(const FieldDesc& a, const FieldDesc& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FieldKind::Rationals: return true;
    case FieldKind::Prime: return a.p == b.p;
    case FieldKind::Number: return a.modulus == b.modulus;
    case FieldKind::RatFunc: return a.var == b.var && same_field(*a.base, *b.base);
  }
  return false;
}

class Scalar;
namespace detail {
struct RatFn {
  std::vector<Scalar> num, den;  // univariate over the base field, den monic
};
}  // namespace detail

class Scalar {
 public:
  Scalar() : f_(FieldDesc::rationals()) {}

  static Scalar zero(const FieldPtr& f) { return from_rat(f, Rat(0)); }
  static Scalar one(const FieldPtr& f) { return from_rat(f, Rat(1)); }
  static Scalar from_int(const FieldPtr& f, long long n) { return from_rat(f, Rat(n)); }

  static Scalar from_rat(const FieldPtr& f, const Rat& r) {
    Scalar s;
    s.f_ = f;
    switch (f->kind) {
      case FieldKind::Rationals:
        s.r_ = r;
        break;
      case FieldKind::Prime: {
        Int num = numerator(r) % Int(f->p);
        if (num < 0) num += f->p;
        Int den = denominator(r) % Int(f->p);
        if (den == 0) throw std::domain_error("rational has no image in F_p");
        s.zp_ = mod_mul(num.convert_to<std::uint64_t>(),
                        mod_inv(den.convert_to<std::uint64_t>(), f->p), f->p);
        break;
      }
      case FieldKind::Number:
        if (r != 0) s.nf_ = {r};
        break;
      case FieldKind::RatFunc: {
        auto fn = std::make_shared<detail::RatFn>();
        if (r != 0) fn->num = {from_rat(f->base, r)};
        fn->den = {one(f->base)};
        s.rf_ = std::move(fn);
        break;
      }
    }
    return s;
  }

  // The generator of a Number or RatFunc field.
  static Scalar generator(const FieldPtr& f) {
    Scalar s;
    s.f_ = f;
    if (f->kind == FieldKind::Number) {
      if (f->degree() < 2) return from_rat(f, -f->modulus[0]);  // x = -c0 when degree 1
      s.nf_ = {Rat(0), Rat(1)};
    } else if (f->kind == FieldKind::RatFunc) {
      auto fn = std::make_shared<detail::RatFn>();
      fn->num = {zero(f->base), one(f->base)};
      fn->den = {one(f->base)};
      s.rf_ = std::move(fn);
    } else {
      throw std::invalid_argument("field has no generator");
    }
    return s;
  }

  const FieldPtr& field() const { return f_; }

  bool is_zero() const {
    switch (f_->kind) {
      case FieldKind::Rationals: return r_ == 0;
      case FieldKind::Prime: return zp_ == 0;
      case FieldKind::Number: return nf_.empty();
      case FieldKind::RatFunc: return rf_->num.empty();
    }
    return false;
  }

  bool is_one() const { return *this == one(f_); }

  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    switch (a.f_->kind) {
      case FieldKind::Rationals: r.r_ = -a.r_; break;
      case FieldKind::Prime: r.zp_ = a.zp_ == 0 ? 0 : a.f_->p - a.zp_; break;
      case FieldKind::Number:
        for (auto& c : r.nf_) c = -c;
        break;
      case FieldKind::RatFunc: {
        auto fn = std::make_shared<detail::RatFn>(*a.rf_);
        for (auto& c : fn->num) c = -c;
        r.rf_ = std::move(fn);
        break;
      }
    }
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check(b);
    Scalar r = a;
    switch (a.f_->kind) {
      case FieldKind::Rationals: r.r_ = a.r_ + b.r_; break;
      case FieldKind::Prime: r.zp_ = (a.zp_ + b.zp_) % a.f_->p; break;
      case FieldKind::Number: {
        r.nf_ = poly_add(a.nf_, b.nf_);
        break;
      }
      case FieldKind::RatFunc: {
        auto fn = std::make_shared<detail::RatFn>();
        fn->num = upoly_add(upoly_mul(a.rf_->num, b.rf_->den), upoly_mul(b.rf_->num, a.rf_->den));
        fn->den = upoly_mul(a.rf_->den, b.rf_->den);
        r.rf_ = std::move(fn);
        r.rf_normalize();
        break;
      }
    }
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check(b);
    Scalar r = a;
    switch (a.f_->kind) {
      case FieldKind::Rationals: r.r_ = a.r_ * b.r_; break;
      case FieldKind::Prime: r.zp_ = mod_mul(a.zp_, b.zp_, a.f_->p); break;
      case FieldKind::Number: {
        std::vector<Rat> prod = poly_mul(a.nf_, b.nf_);
        r.nf_ = nf_reduce(prod, a.f_->modulus);
        break;
      }
      case FieldKind::RatFunc: {
        auto fn = std::make_shared<detail::RatFn>();
        fn->num = upoly_mul(a.rf_->num, b.rf_->num);
        fn->den = upoly_mul(a.rf_->den, b.rf_->den);
        r.rf_ = std::move(fn);
        r.rf_normalize();
        break;
      }
    }
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in coefficient field");
    Scalar r = *this;
    switch (f_->kind) {
      case FieldKind::Rationals: r.r_ = 1 / r_; break;
      case FieldKind::Prime: r.zp_ = mod_inv(zp_, f_->p); break;
      case FieldKind::Number: r.nf_ = nf_inverse(nf_, f_->modulus); break;
      case FieldKind::RatFunc: {
        auto fn = std::make_shared<detail::RatFn>();
        fn->num = rf_->den;
        fn->den = rf_->num;
        r.rf_ = std::move(fn);
        r.rf_normalize();
        break;
      }
    }
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    switch (a.f_->kind) {
      case FieldKind::Rationals: return a.r_ == b.r_;
      case FieldKind::Prime: return a.zp_ == b.zp_;
      case FieldKind::Number: return a.nf_ == b.nf_;
      case FieldKind::RatFunc:
        // Both sides normalized (reduced, monic denominator).
        return upoly_eq(a.rf_->num, b.rf_->num) && upoly_eq(a.rf_->den, b.rf_->den);
    }
    return false;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order for deterministic container iteration; no algebraic meaning.
  friend bool scalar_less(const Scalar& a, const Scalar& b) {
    return a.to_string() < b.to_string();
  }

  // The rational value, when the element lies in the prime subfield image of QQ.
  Rat as_rational() const {
    switch (f_->kind) {
      case FieldKind::Rationals: return r_;
      case FieldKind::Prime: return Rat(zp_);
      case FieldKind::Number:
        if (nf_.size() > 1) throw std::domain_error("not a rational element");
        return nf_.empty() ? Rat(0) : nf_[0];
      case FieldKind::RatFunc: {
        if (rf_->num.size() > 1 || rf_->den.size() != 1 || !rf_->den[0].is_one())
          throw std::domain_error("not a rational element");
        return rf_->num.empty() ? Rat(0) : rf_->num[0].as_rational();
      }
    }
    return Rat(0);
  }

  std::string to_string() const {
    std::ostringstream out;
    switch (f_->kind) {
      case FieldKind::Rationals: out << rat_to_string(r_); break;
      case FieldKind::Prime: out << zp_; break;
      case FieldKind::Number: out << upoly_str_rat(nf_, f_->var); break;
      case FieldKind::RatFunc: {
        bool trivial_den = rf_->den.size() == 1 && rf_->den[0].is_one();
        std::string num = upoly_str(rf_->num, f_->var);
        if (trivial_den) {
          out << num;
        } else {
          if (upoly_nterms(rf_->num) > 1) num = "(" + num + ")";
          std::string den = upoly_str(rf_->den, f_->var);
          if (upoly_nterms(rf_->den) > 1) den = "(" + den + ")";
          out << num << "/" << den;
        }
        break;
      }
    }
    return out.str();
  }

  // True when rendering needs parentheses in a product context.
  bool needs_parens() const {
    std::string s = to_string();
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == ' ' || c == '+' || c == '*' || c == '/') return true;
      if (c == '-' && i > 0) return true;
    }
    return false;
  }

 private:
  FieldPtr f_;
  Rat r_;
  std::uint64_t zp_ = 0;
  std::vector<Rat> nf_;
  std::shared_ptr<const detail::RatFn> rf_;

  void check(const Scalar& o) const {
    if (f_ != o.f_ && !same_field(*f_, *o.f_))
      throw std::invalid_argument("scalar operation across different fields");
  }

  static std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (static_cast<unsigned __int128>(a) * b % p);
  }

  static std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid.
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
      long long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
  }

  static std::vector<Rat> poly_add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<Rat> nf_reduce(std::vector<Rat> a, const std::vector<Rat>& mod) {
    const std::size_t d = mod.size() - 1;
    while (a.size() > d) {
      Rat lead = a.back();
      std::size_t shift = a.size() - 1 - d;
      if (lead != 0)
        for (std::size_t i = 0; i <= d; ++i) a[shift + i] -= lead * mod[i];
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  }

  static std::vector<Rat> nf_inverse(const std::vector<Rat>& a, const std::vector<Rat>& mod) {
    // Extended Euclid in QQ[x]: find u with u*a == 1 (mod modulus).
    std::vector<Rat> r0 = mod, r1 = a, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
      // r0 = q*r1 + r
      std::vector<Rat> q, rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rat c = rem.back() / r1.back();
        std::size_t shift = rem.size() - r1.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
      }
      std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
      r0 = r1; r1 = rem; s0 = s1; s1 = s2;
    }
    if (r0.size() != 1)
      throw std::domain_error("number field element not invertible (modulus reducible?)");
    Rat lead = r0[0];
    std::vector<Rat> inv = s0;
    for (auto& c : inv) c /= lead;
    return nf_reduce(std::move(inv), mod);
  }

  static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> nb = b;
    for (auto& c : nb) c = -c;
    return poly_add(a, nb);
  }

  // --- univariate polynomials over the base field (RatFunc payloads) ---

  static std::vector<Scalar> upoly_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r = a;
    if (r.size() < b.size()) r.resize(b.size(), b[0].f_ ? zero(b[0].f_) : Scalar());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (i < a.size()) ? a[i] + b[i] : b[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
  }

  static std::vector<Scalar> upoly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Scalar> r(a.size() + b.size() - 1, zero(a[0].f_));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
  }

  static bool upoly_eq(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  static std::vector<Scalar> upoly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    while (!b.empty()) {
      // a mod b
      while (a.size() >= b.size() && !a.empty()) {
        Scalar c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
      }
      std::swap(a, b);
    }
    return a;
  }

  void rf_normalize() {
    auto fn = std::make_shared<detail::RatFn>(*rf_);
    if (fn->den.empty()) throw std::domain_error("zero denominator in rational function");
    if (fn->num.empty()) {
      fn->den = {one(f_->base)};
      rf_ = std::move(fn);
      return;
    }
    std::vector<Scalar> g = upoly_gcd(fn->num, fn->den);
    if (g.size() > 1) {
      fn->num = upoly_divexact(fn->num, g);
      fn->den = upoly_divexact(fn->den, g);
    }
    Scalar lead = fn->den.back();
    if (!lead.is_one()) {
      Scalar li = lead.inverse();
      for (auto& c : fn->num) c = c * li;
      for (auto& c : fn->den) c = c * li;
    }
    rf_ = std::move(fn);
  }

  static std::vector<Scalar> upoly_divexact(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> rem = a, q(a.size() - b.size() + 1, zero(a.empty() ? b[0].f_ : a[0].f_));
    while (!rem.empty() && rem.size() >= b.size()) {
      Scalar c = rem.back() / b.back();
      std::size_t shift = rem.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - c * b[i];
      while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    if (!rem.empty()) throw std::logic_error("upoly_divexact: not divisible");
    return q;
  }

  static std::string upoly_str_rat(const std::vector<Rat>& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] == 0) continue;
      std::string term;
      Rat c = a[k];
      bool neg = c < 0;
      Rat ac = neg ? Rat(-c) : c;
      std::string cs = rat_to_string(ac);
      if (k == 0) term = cs;
      else {
        term = (ac == 1) ? var : cs + "*" + var;
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (out.empty()) out = (neg ? "-" : "") + term;
      else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

  static std::size_t upoly_nterms(const std::vector<Scalar>& a) {
    std::size_t n = 0;
    for (const auto& c : a)
      if (!c.is_zero()) ++n;
    return n;
  }

  static std::string upoly_str(const std::vector<Scalar>& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k].is_zero()) continue;
      std::string cs = a[k].to_string();
      std::string term;
      if (k == 0) term = cs;
      else {
        if (a[k].is_one()) term = var;
        else if (cs.find_first_of("+-/") != std::string::npos) term = "(" + cs + ")*" + var;
        else term = cs + "*" + var;
        if (k > 1) term += "^" + std::to_string(k);
      }
      out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
  }
};

}  // namespace heckeloc
