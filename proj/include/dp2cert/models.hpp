#pragma once

// The fixed geometric objects under verification: the degree-2 del Pezzo
// surface w^2 + q(x,y,z) = 0 over Q(sqrt(-7)) in P(2,1,1,1), its branch
// quartic q, the integral model of the surface equation at the place over 2,
// and the verified bitangent with its two line lifts.

#include "dp2cert/poly.hpp"
#include "dp2cert/poly_text.hpp"

namespace dp2::models {

using QE = QuadExt<-7>;
using TW = Tower<-7>;

inline const std::vector<std::string>& surface_vars() {
  static const std::vector<std::string> v{"w", "x", "y", "z"};
  return v;
}
inline const std::vector<int>& surface_weights() {
  static const std::vector<int> w{2, 1, 1, 1};
  return w;
}
inline const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}
inline const std::vector<int>& plane_weights() {
  static const std::vector<int> w{1, 1, 1};
  return w;
}
inline const std::vector<std::string>& binary_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}
inline const std::vector<int>& binary_weights() {
  static const std::vector<int> w{1, 1};
  return w;
}

// w^2 + (x^4+y^4+z^4) - (3/2)(1-sqrt(-7)) (x^2y^2 + x^2z^2 + y^2z^2)
inline WeightedForm<QE> surface_form() {
  static const WeightedForm<QE> f = parse_form<QE>(
      "w^2 + x^4 + y^4 + z^4 - 3/2*(1 - rt)*(x^2 y^2 + x^2 z^2 + y^2 z^2)",
      surface_vars(), surface_weights());
  return f;
}

// The branch quartic of the anticanonical double cover, in x, y, z.
inline WeightedForm<QE> branch_quartic() {
  static const WeightedForm<QE> f = parse_form<QE>(
      "x^4 + y^4 + z^4 - 3/2*(1 - rt)*(x^2 y^2 + x^2 z^2 + y^2 z^2)",
      plane_vars(), plane_weights());
  return f;
}

// Integral model of the surface equation after embedding into Q2:
// w^2 + (x^4+y^4+z^4) + 14 (x^2y^2 + x^2z^2 + y^2z^2).
inline WeightedForm<Rational> local_model_form() {
  static const WeightedForm<Rational> f = parse_form<Rational>(
      "w^2 + x^4 + y^4 + z^4 + 14*(x^2 y^2 + x^2 z^2 + y^2 z^2)",
      surface_vars(), surface_weights());
  return f;
}

// The verified bitangent x + y + z = 0 of the branch quartic.
inline WeightedForm<QE> bitangent_line() {
  static const WeightedForm<QE> f = parse_form<QE>("x + y + z", plane_vars(), plane_weights());
  return f;
}

// mu = i*((1 - sqrt(-7))/2)^2; the two lines over the bitangent are
// w +- mu*(x^2 + x y + y^2) = 0.
inline TW lift_scale_mu() {
  QE half_one_minus_rt(Rational(1, 2), Rational(-1, 2));
  return TW(QE(0), half_one_minus_rt * half_one_minus_rt);
}

inline WeightedForm<QE> lift_quadratic() {
  static const WeightedForm<QE> f =
      parse_form<QE>("x^2 + x y + y^2", binary_vars(), binary_weights());
  return f;
}

}  // namespace dp2::models
