#pragma once

// Exact integer and rational arithmetic. Backed by Boost.Multiprecision
// (cpp_int / cpp_rational): denominators are kept positive and fractions
// reduced after every operation, which is exactly the invariant we need.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dp2 {

using Int      = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Int pow2(unsigned k) { return Int(1) << k; }

// x mod 2^k, canonical representative in [0, 2^k).
inline Int mod_pow2(const Int& x, unsigned k) {
  Int m = pow2(k);
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// Exponent of 2 in a nonzero integer.
inline unsigned ord2(const Int& x) {
  if (x == 0) throw std::domain_error("ord2(0) is infinite");
  return static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(x)));
}

// 2-adic valuation of a rational; nullopt encodes +infinity (x = 0).
inline std::optional<long> val2(const Rational& x) {
  if (x == 0) return std::nullopt;
  return static_cast<long>(ord2(num(x))) - static_cast<long>(ord2(den(x)));
}

// Inverse of an odd integer modulo 2^k (Newton iteration, doubles correct bits).
inline Int modinv_pow2(const Int& odd, unsigned k) {
  if ((odd & 1) == 0) throw std::domain_error("modinv_pow2: even argument");
  Int inv = 1;
  for (unsigned bits = 1; bits < k; bits *= 2) {
    inv = mod_pow2(inv * (2 - odd * inv), k);
  }
  return mod_pow2(inv, k);
}

inline std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

}  // namespace dp2
