#include "dp2cert/padic.hpp"

#include <stdexcept>

namespace dp2 {

PadicApprox PadicApprox::make(long valuation, Int unit, unsigned precision) {
  if (precision == 0) throw std::invalid_argument("PadicApprox: precision must be positive");
  unit = mod_pow2(unit, precision);
  if ((unit & 1) == 0) throw std::invalid_argument("PadicApprox: unit residue must be odd");
  return PadicApprox(valuation, std::move(unit), precision);
}

PadicApprox PadicApprox::from_rational(const Rational& x, unsigned precision) {
  if (x == 0) return zero();
  Int n = num(x), d = den(x);
  unsigned vn = ord2(n), vd = ord2(d);
  Int n_odd = n >> vn;
  Int d_odd = d >> vd;
  Int unit = mod_pow2(n_odd * modinv_pow2(d_odd, precision), precision);
  return PadicApprox(static_cast<long>(vn) - static_cast<long>(vd), std::move(unit), precision);
}

long PadicApprox::valuation() const {
  if (zero_) throw std::domain_error("PadicApprox: zero has infinite valuation");
  return valuation_;
}

const Int& PadicApprox::unit_residue() const {
  if (zero_) throw std::domain_error("PadicApprox: zero has no unit part");
  return unit_;
}

unsigned PadicApprox::precision() const {
  if (zero_) throw std::domain_error("PadicApprox: zero has no finite precision");
  return precision_;
}

PadicApprox PadicApprox::mul(const PadicApprox& y) const {
  if (zero_ || y.zero_) return zero();
  unsigned p = std::min(precision_, y.precision_);
  return PadicApprox(valuation_ + y.valuation_, mod_pow2(unit_ * y.unit_, p), p);
}

PadicApprox PadicApprox::negated() const {
  if (zero_) return zero();
  return PadicApprox(valuation_, mod_pow2(-unit_, precision_), precision_);
}

PadicApprox PadicApprox::add(const PadicApprox& y) const {
  if (zero_) return y;
  if (y.zero_) return *this;
  // Work at the common absolute precision; the sum's valuation is read off
  // the exact sum of the residues, which is only legitimate below that bound.
  long abs_prec = std::min(known_through(), y.known_through());
  long base = std::min(valuation_, y.valuation_);
  unsigned window = static_cast<unsigned>(abs_prec - base);
  Int s = mod_pow2((unit_ << static_cast<unsigned>(valuation_ - base)) +
                       (y.unit_ << static_cast<unsigned>(y.valuation_ - base)),
                   window);
  if (s == 0)
    throw std::domain_error("PadicApprox::add: cancellation exhausts known precision");
  unsigned v = ord2(s);
  return PadicApprox(base + static_cast<long>(v), s >> v, window - v);
}

Int PadicApprox::residue_mod(unsigned k) const {
  if (zero_) return 0;
  if (valuation_ < 0) throw std::domain_error("residue_mod: negative valuation");
  if (static_cast<long>(k) > known_through())
    throw std::domain_error("residue_mod: not enough known bits");
  if (valuation_ >= static_cast<long>(k)) return 0;
  return mod_pow2(unit_ << static_cast<unsigned>(valuation_), k);
}

std::string PadicApprox::to_text() const {
  if (zero_) return "0 (exact)";
  return "2^" + std::to_string(valuation_) + " * (" + unit_.str() + " mod 2^" +
         std::to_string(precision_) + ")";
}

bool is_square_q2(const PadicApprox& x) {
  if (x.is_zero())
    throw std::domain_error("is_square_q2: zero is outside the Q2* criterion");
  if (x.precision() < 3)
    throw std::invalid_argument("is_square_q2: needs at least 3 unit bits");
  return x.valuation() % 2 == 0 && mod_pow2(x.unit_residue(), 3) == 1;
}

Int hensel_sqrt(const Int& a, unsigned k) {
  if (k < 3) throw std::invalid_argument("hensel_sqrt: k must be at least 3");
  if (mod_pow2(a, 3) != 1) throw std::invalid_argument("hensel_sqrt: a must be 1 mod 8");
  // One-bit-per-step lift, kept on the root = 1 mod 4 branch.  We lift one
  // bit past k so the returned residue is the truncation of the 2-adic root
  // (truncations at different k then agree).
  Int t = 1;
  for (unsigned m = 3; m <= k; ++m) {
    if (mod_pow2(t * t - a, m + 1) != 0) t += pow2(m - 1);
  }
  return mod_pow2(t, k);
}

EmbeddingChoice EmbeddingChoice::theta1(unsigned precision) {
  return EmbeddingChoice{hensel_sqrt(Int(-7), precision), precision, Label::Theta1};
}

EmbeddingChoice EmbeddingChoice::theta2(unsigned precision) {
  return theta1(precision).conjugate();
}

EmbeddingChoice EmbeddingChoice::conjugate() const {
  return EmbeddingChoice{mod_pow2(-root_residue, precision), precision,
                         label == Label::Theta1 ? Label::Theta2 : Label::Theta1};
}

PadicApprox embed_theta(const QuadExt<-7>& x, const EmbeddingChoice& choice, unsigned k) {
  if (k == 0) throw std::invalid_argument("embed_theta: k must be positive");
  if (x.b == 0) return PadicApprox::from_rational(x.a, k);

  // theta(x) = a + b*R with R the exact root; using the residue r instead
  // introduces an error b*(R - r) of valuation >= choice.precision + val2(b).
  Rational approx = x.a + x.b * Rational(choice.root_residue);
  long abs_prec = static_cast<long>(choice.precision) + *val2(x.b);
  if (approx == 0)
    throw std::invalid_argument("embed_theta: insufficient precision (approximation vanished)");
  long v = *val2(approx);
  if (v >= abs_prec || abs_prec - v < static_cast<long>(k))
    throw std::invalid_argument("embed_theta: insufficient precision for requested bits");
  return PadicApprox::make(v, PadicApprox::from_rational(approx, k).unit_residue(), k);
}

}  // namespace dp2
