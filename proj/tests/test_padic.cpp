#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp2cert/padic.hpp"

#include <random>
#include <set>

using namespace dp2;

namespace {

Rational rand_nonzero_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 400);
  std::uniform_int_distribution<int> den(1, 60);
  std::uniform_int_distribution<int> sign(0, 1);
  return Rational((sign(rng) ? 1 : -1) * num(rng), den(rng));
}

// Brute-force square roots of a mod 2^k among odd residues.
std::set<Int> brute_sqrt_set(const Int& a, unsigned k) {
  std::set<Int> roots;
  const Int m = pow2(k);
  for (Int t = 1; t < m; t += 2)
    if (mod_pow2(t * t - a, k) == 0) roots.insert(t);
  return roots;
}

}  // namespace

TEST_CASE("val2 examples") {
  CHECK(val2(Rational(8)) == 3);
  CHECK(val2(Rational(Int(181) * 181 + 7)) == 15);  // 181^2 + 7 = 2^15
  CHECK(val2(Rational(3, 2)) == -1);
  CHECK(val2(Rational(0)) == std::nullopt);
  CHECK(val2(Rational(-12)) == 2);
}

TEST_CASE("val2 is a valuation: multiplicative and ultrametric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational x = rand_nonzero_rat(rng);
    const Rational y = rand_nonzero_rat(rng);
    CHECK(*val2(x * y) == *val2(x) + *val2(y));
    if (x + y != 0) {
      CHECK(*val2(x + y) >= std::min(*val2(x), *val2(y)));
      if (*val2(x) != *val2(y))
        CHECK(*val2(x + y) == std::min(*val2(x), *val2(y)));
    }
  }
}

TEST_CASE("PadicApprox representation and rendering") {
  const auto x = PadicApprox::from_rational(Rational(12), 6);  // 12 = 2^2 * 3
  CHECK(x.valuation() == 2);
  CHECK(x.unit_residue() == 3);
  CHECK(x.to_text() == "2^2 * (3 mod 2^6)");

  const auto half = PadicApprox::from_rational(Rational(3, 2), 6);
  CHECK(half.valuation() == -1);
  CHECK(half.unit_residue() == 3);

  const auto third = PadicApprox::from_rational(Rational(1, 3), 4);
  // 1/3 = 11 mod 16 since 3*11 = 33 = 1 mod 16
  CHECK(third.valuation() == 0);
  CHECK(third.unit_residue() == 11);

  CHECK(PadicApprox::zero().is_zero());
  CHECK_THROWS_AS(PadicApprox::zero().valuation(), std::domain_error);
  CHECK_THROWS_AS(PadicApprox::make(0, Int(4), 5), std::invalid_argument);  // even unit
}

TEST_CASE("PadicApprox arithmetic tracks precision") {
  const auto a = PadicApprox::make(1, Int(5), 8);
  const auto b = PadicApprox::make(2, Int(3), 6);
  const auto p = a.mul(b);
  CHECK(p.valuation() == 3);
  CHECK(p.precision() == 6);
  CHECK(p.unit_residue() == 15);

  const auto s = a.add(b);  // 2*5 + 4*3 = 22 = 2 * 11
  CHECK(s.valuation() == 1);
  CHECK(s.residue_mod(5) == 22);

  // Exact cancellation within the known window is an error, not a zero.
  const auto c = PadicApprox::make(0, Int(3), 4);
  const auto d = PadicApprox::make(0, Int(13), 4);  // 3 + 13 = 16 = 0 mod 2^4
  CHECK_THROWS_AS(c.add(d), std::domain_error);

  CHECK_THROWS_AS(a.residue_mod(20), std::domain_error);  // only 9 bits known
  CHECK(PadicApprox::from_rational(Rational(-14), 6).residue_mod(6) == 50);
}

TEST_CASE("is_square_q2 examples") {
  CHECK(is_square_q2(PadicApprox::from_rational(Rational(-7), 7)));
  CHECK_FALSE(is_square_q2(PadicApprox::from_rational(Rational(2), 7)));
  CHECK(is_square_q2(PadicApprox::from_rational(Rational(17), 7)));

  // 17 has an explicit square root mod 2^7.
  const auto roots17 = brute_sqrt_set(Int(17), 7);
  CHECK(!roots17.empty());

  CHECK_THROWS_AS(is_square_q2(PadicApprox::zero()), std::domain_error);
  CHECK_THROWS_AS(is_square_q2(PadicApprox::make(0, Int(1), 2)), std::invalid_argument);
}

TEST_CASE("is_square_q2(x^2) on random nonzero rationals") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = rand_nonzero_rat(rng);
    CHECK(is_square_q2(PadicApprox::from_rational(x * x, 9)));
  }
}

TEST_CASE("hensel_sqrt: the lemma's roots of -7") {
  const Int r = hensel_sqrt(Int(-7), 7);
  CHECK(r == 53);
  CHECK(mod_pow2(Int(181), 7) == 53);      // 181 mod 128
  CHECK(mod_pow2(-r, 7) == 75);            // the other root
  CHECK(mod_pow2(Int(-181), 7) == 75);
  CHECK(mod_pow2(r * r + 7, 7) == 0);

  const Int r20 = hensel_sqrt(Int(-7), 20);
  CHECK(mod_pow2(r20 * r20 + 7, 20) == 0);
  CHECK(mod_pow2(r20, 2) == 1);  // canonical branch

  // Independent low-precision oracle: brute force over odd residues mod 2^12.
  const auto roots12 = brute_sqrt_set(Int(-7), 12);
  CHECK(roots12.size() == 4);
  CHECK(roots12.count(hensel_sqrt(Int(-7), 12)) == 1);
  CHECK(mod_pow2(r20, 12) == hensel_sqrt(Int(-7), 12));
}

TEST_CASE("hensel_sqrt trivial and error cases") {
  CHECK(hensel_sqrt(Int(1), 10) == 1);
  CHECK(hensel_sqrt(Int(9), 3) == 5);  // canonical root of 9 is -3 (= 1 mod 4); -3 mod 8 = 5
  CHECK_THROWS_AS(hensel_sqrt(Int(3), 8), std::invalid_argument);   // 3 != 1 mod 8
  CHECK_THROWS_AS(hensel_sqrt(Int(-7), 2), std::invalid_argument);  // k < 3
}

TEST_CASE("hensel_sqrt truncation self-consistency") {
  for (long long a : {-7LL, 17LL, 33LL, 73LL, 113LL}) {
    for (unsigned k = 4; k <= 24; k += 5) {
      for (unsigned kp = 3; kp < k; ++kp) {
        CHECK(mod_pow2(hensel_sqrt(Int(a), k), kp) == hensel_sqrt(Int(a), kp));
      }
    }
  }
}

TEST_CASE("embedding choices: conjugate roots") {
  const auto th1 = EmbeddingChoice::theta1(20);
  const auto th2 = EmbeddingChoice::theta2(20);
  CHECK(mod_pow2(th1.root_residue * th1.root_residue + 7, 20) == 0);
  CHECK(mod_pow2(th1.root_residue + th2.root_residue, 20) == 0);
  CHECK(th1.label == EmbeddingChoice::Label::Theta1);
  CHECK(th2.label == EmbeddingChoice::Label::Theta2);
  CHECK(th2.conjugate().root_residue == th1.root_residue);
}

TEST_CASE("embed_theta: the lemma's congruences") {
  const auto th1 = EmbeddingChoice::theta1(80);

  const auto img_root = embed_theta(QuadExt<-7>::sqrt_d(), th1, 32);
  CHECK(img_root.valuation() == 0);
  CHECK(img_root.residue_mod(7) == 53);  // = 181 mod 128

  const QuadExt<-7> ratio(Rational(3, 2), Rational(-3, 2));
  const auto img = embed_theta(ratio, th1, 32);
  CHECK(img.residue_mod(6) == 50);  // -14 mod 64
  CHECK(img.valuation() == 1);      // -14 = 2 * (-7)

  const auto one1 = embed_theta(QuadExt<-7>(1), th1, 32);
  const auto one2 = embed_theta(QuadExt<-7>(1), th1.conjugate(), 32);
  CHECK((one1.valuation() == 0 && one1.unit_residue() == 1));
  CHECK((one2.valuation() == 0 && one2.unit_residue() == 1));

  // theta2(sqrt(-7)) = -theta1(sqrt(-7))
  const auto img_root2 = embed_theta(QuadExt<-7>::sqrt_d(), EmbeddingChoice::theta2(80), 32);
  CHECK(mod_pow2(img_root.residue_mod(20) + img_root2.residue_mod(20), 20) == 0);
}

TEST_CASE("embed_theta is a ring homomorphism mod 2^k") {
  std::mt19937_64 rng(13);
  const unsigned k = 64;
  const auto th1 = EmbeddingChoice::theta1(k + 80);
  auto rand_int2adic = [&rng]() {
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(0, 4);
    return Rational(num(rng), 2 * den(rng) + 1);
  };
  const Int m = pow2(k);
  for (int i = 0; i < 1000; ++i) {
    const QuadExt<-7> x(rand_int2adic(), rand_int2adic());
    const QuadExt<-7> y(rand_int2adic(), rand_int2adic());
    const Int tx = embed_theta(x, th1, k + 8).residue_mod(k);
    const Int ty = embed_theta(y, th1, k + 8).residue_mod(k);
    CHECK((tx * ty - embed_theta(x * y, th1, k + 8).residue_mod(k)) % m == 0);
    CHECK((tx + ty - embed_theta(x + y, th1, k + 8).residue_mod(k)) % m == 0);
  }
}

TEST_CASE("embed_theta precision accounting") {
  // x = -53 + sqrt(-7) cancels to valuation 7 against an 8-bit root: only one
  // unit bit would remain, so requesting 8 bits must fail.
  const auto low = EmbeddingChoice::theta1(8);
  CHECK_THROWS_AS(embed_theta(QuadExt<-7>(Rational(-53), Rational(1)), low, 8),
                  std::invalid_argument);
  // The same element is fine against a high-precision root.
  const auto high = EmbeddingChoice::theta1(96);
  const auto img = embed_theta(QuadExt<-7>(Rational(-53), Rational(1)), high, 8);
  CHECK(img.valuation() == 7);

  // Exact zero embeds exactly.
  CHECK(embed_theta(QuadExt<-7>(0), high, 8).is_zero());
}
