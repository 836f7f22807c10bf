#pragma once

// The two extension rings used by the toolkit: Q(sqrt(D)) and Q(sqrt(D), i).
// D is a compile-time parameter so tests can exercise other quadratic fields;
// all production code instantiates D = -7.

#include "dp2cert/rational.hpp"

namespace dp2 {

// a + b*sqrt(D), exact.
template <long long D>
struct QuadExt {
  Rational a{};
  Rational b{};

  QuadExt() = default;
  QuadExt(Rational ra) : a(std::move(ra)) {}          // NOLINT: promotion
  QuadExt(long long n) : a(n) {}                      // NOLINT: promotion
  QuadExt(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QuadExt sqrt_d() { return QuadExt(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QuadExt conj() const { return QuadExt(a, -b); }

  // N(a + b*sqrt(D)) = a^2 - D*b^2; multiplicative.
  Rational norm() const { return a * a - Rational(D) * b * b; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b);
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a * y.a + Rational(D) * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  QuadExt inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("QuadExt: inverse of zero");
    return QuadExt(a / n, -b / n);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

// u + v*i with u, v in Q(sqrt(D)).  An element lies in the base quadratic
// field exactly when v = 0.
template <long long D>
struct Tower {
  QuadExt<D> u{};
  QuadExt<D> v{};

  Tower() = default;
  Tower(QuadExt<D> ru) : u(std::move(ru)) {}          // NOLINT: promotion
  Tower(Rational r) : u(std::move(r)) {}              // NOLINT: promotion
  Tower(long long n) : u(n) {}                        // NOLINT: promotion
  Tower(QuadExt<D> ru, QuadExt<D> rv) : u(std::move(ru)), v(std::move(rv)) {}

  static Tower imaginary_unit() { return Tower(QuadExt<D>(0), QuadExt<D>(1)); }

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  bool in_base_field() const { return v.is_zero(); }

  Tower conj_i() const { return Tower(u, -v); }

  friend Tower operator+(const Tower& x, const Tower& y) { return Tower(x.u + y.u, x.v + y.v); }
  friend Tower operator-(const Tower& x, const Tower& y) { return Tower(x.u - y.u, x.v - y.v); }
  friend Tower operator-(const Tower& x) { return Tower(-x.u, -x.v); }
  friend Tower operator*(const Tower& x, const Tower& y) {
    // (u + vi)(u' + v'i) = (uu' - vv') + (uv' + vu')i
    return Tower(x.u * y.u - x.v * y.v, x.u * y.v + x.v * y.u);
  }
  Tower inverse() const {
    QuadExt<D> n = u * u + v * v;  // (u+vi)(u-vi)
    if (n.is_zero()) throw std::domain_error("Tower: inverse of zero (or zero divisor)");
    QuadExt<D> ninv = n.inverse();
    return Tower(u * ninv, -v * ninv);
  }
  friend Tower operator/(const Tower& x, const Tower& y) { return x * y.inverse(); }

  Tower& operator+=(const Tower& y) { return *this = *this + y; }
  Tower& operator-=(const Tower& y) { return *this = *this - y; }
  Tower& operator*=(const Tower& y) { return *this = *this * y; }

  friend bool operator==(const Tower& x, const Tower& y) { return x.u == y.u && x.v == y.v; }
  friend bool operator!=(const Tower& x, const Tower& y) { return !(x == y); }
};

}  // namespace dp2
