#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "heckeloc/poly.hpp"

namespace heckeloc {

// Two-colored quantum numbers in ZZ[x_s, x_t], following the recursion
//   [n+1]_t = [n]_s [2]_t - [n-1]_t   (and the color swap),
// with [0] = 0, [1] = 1, [2]_s = x_s, [2]_t = x_t, [-n]_c = -[n]_c.
// They are computed over the rationals; integrality is a theorem, not an
// assumption, and the binomial operation asserts the exactness it relies on.

enum class QColor { S = 0, T = 1 };
inline QColor other(QColor c) { return c == QColor::S ? QColor::T : QColor::S; }

class QuantumRing {
 public:
  QuantumRing()
      : ring_(PolyRing::make(FieldDesc::rationals(), {"x_s", "x_t"})) {}

  const RingPtr& ring() const { return ring_; }
  Poly xs() const { return Poly::variable(ring_, 0); }
  Poly xt() const { return Poly::variable(ring_, 1); }

  Poly qnum(long long n, QColor c) const {
    if (n < 0) return -qnum(-n, c);
    auto key = std::make_pair(n, c);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Poly value = [&] {
      if (n == 0) return Poly::zero(ring_);
      if (n == 1) return Poly::from_int(ring_, 1);
      if (n == 2) return c == QColor::S ? xs() : xt();
      // [n]_c = [n-1]_{c'} [2]_c - [n-2]_c
      return qnum(n - 1, other(c)) * qnum(2, c) - qnum(n - 2, c);
    }();
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, value);
    return value;
  }

  // [n k]_c = [n]_c [n-1]_c ... [n-k+1]_c / ([1]_c [2]_c ... [k]_c).
  // Exactness of the division is the integrality theorem; a failure is
  // a loud internal error rather than a silent fallback.
  Poly qbinom(long long n, long long k, QColor c) const {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom requires 0 <= k <= n");
    Poly num = Poly::from_int(ring_, 1);
    Poly den = Poly::from_int(ring_, 1);
    for (long long i = 0; i < k; ++i) num = num * qnum(n - i, c);
    for (long long j = 1; j <= k; ++j) den = den * qnum(j, c);
    auto q = poly_exact_div(num, den);
    if (!q)
      throw std::logic_error("quantum binomial coefficient is not integral; "
                             "this contradicts the divisibility theorem");
    return *q;
  }

 private:
  RingPtr ring_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<long long, QColor>, Poly> memo_;
};

inline const QuantumRing& quantum_ring() {
  static QuantumRing qr;
  return qr;
}

inline Poly qnum(long long n, QColor c) { return quantum_ring().qnum(n, c); }
inline Poly qbinom(long long n, long long k, QColor c) { return quantum_ring().qbinom(n, k, c); }

// Evaluates a quantum polynomial at x_s -> vs, x_t -> vt in a target field.
inline Scalar qspecialize(const Poly& p, const Scalar& vs, const Scalar& vt) {
  return p.specialize({vs, vt}, rational_hom(vs.field()));
}

}  // namespace heckeloc
