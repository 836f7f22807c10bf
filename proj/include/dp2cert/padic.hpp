#pragma once

// Truncated 2-adic arithmetic: valuations, the square criterion in Q2*, the
// Hensel lift of square roots, and the embedding Q(sqrt(-7)) -> Q2.
//
// A nonzero value is stored as 2^valuation * unit with the unit known modulo
// 2^precision.  All residues are canonical representatives in [0, 2^k).

#include "dp2cert/quadext.hpp"
#include "dp2cert/rational.hpp"

#include <string>

namespace dp2 {

class PadicApprox {
 public:
  // Exact zero (distinguished marker; infinite valuation).
  static PadicApprox zero() { return PadicApprox(); }

  static PadicApprox make(long valuation, Int unit, unsigned precision);
  static PadicApprox from_rational(const Rational& x, unsigned precision);

  bool is_zero() const { return zero_; }
  long valuation() const;
  const Int& unit_residue() const;
  unsigned precision() const;

  // Absolute precision: the value is known modulo 2^(valuation + precision).
  long known_through() const { return valuation() + static_cast<long>(precision()); }

  PadicApprox mul(const PadicApprox& y) const;
  PadicApprox add(const PadicApprox& y) const;
  PadicApprox negated() const;

  // Canonical residue of the value modulo 2^k; requires valuation >= 0 and
  // enough known bits.
  Int residue_mod(unsigned k) const;

  // CLI rendering, e.g. "2^1 * (25 mod 2^6)".
  std::string to_text() const;

 private:
  PadicApprox() = default;
  PadicApprox(long v, Int u, unsigned p) : zero_(false), valuation_(v), unit_(std::move(u)), precision_(p) {}

  bool zero_ = true;
  long valuation_ = 0;
  Int unit_ = 0;
  unsigned precision_ = 1;
};

// True iff x is a square in Q2*: even valuation and unit = 1 mod 8.
// Rejects the zero marker and precision < 3.
bool is_square_q2(const PadicApprox& x);

// The square root of a (a = 1 mod 8) in Z2*, truncated to k bits, on the
// branch with root = 1 mod 4.  The result is the truncation of the 2-adic
// root, so truncations at different k agree.  Requires k >= 3.
Int hensel_sqrt(const Int& a, unsigned k);

// One of the two embeddings Q(sqrt(-7)) -> Q2, pinned by the residue of the
// image of sqrt(-7).  theta1 carries sqrt(-7) to the root = 1 mod 4; theta2
// is its negative (the Galois-conjugate embedding).
struct EmbeddingChoice {
  enum class Label { Theta1, Theta2 };

  Int root_residue;    // odd, root_residue^2 = -7 mod 2^precision
  unsigned precision;
  Label label;

  static EmbeddingChoice theta1(unsigned precision);
  static EmbeddingChoice theta2(unsigned precision);
  EmbeddingChoice conjugate() const;
};

// theta(a + b*sqrt(-7)) as a PadicApprox with k known unit bits.  Throws if
// the choice's precision cannot pin down k bits of the result.
PadicApprox embed_theta(const QuadExt<-7>& x, const EmbeddingChoice& choice, unsigned k);

}  // namespace dp2
