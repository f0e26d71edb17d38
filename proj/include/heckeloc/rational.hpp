#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckeloc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_of(long long n) { return Rat(n); }

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_make(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }  // the boost constructor needs den > 0
  return Rat(num, den);
}

// Parses "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return rat_make(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace heckeloc
