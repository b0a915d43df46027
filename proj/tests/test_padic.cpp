#include "qeuler/errors.hpp"
#include "qeuler/padic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qeuler;

namespace {

// a and b agree modulo p^digits (both must carry that much).
bool agree(const PadicApprox& a, const PadicApprox& b, long digits) {
  return known_divisible(a - b, digits);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 400);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Padic, Primes) {
  EXPECT_TRUE(is_odd_prime(3));
  EXPECT_TRUE(is_odd_prime(101));
  EXPECT_FALSE(is_odd_prime(2));
  EXPECT_FALSE(is_odd_prime(9));
  EXPECT_FALSE(is_odd_prime(1));
  EXPECT_THROW(require_odd_prime(15), DomainError);
  EXPECT_THROW(PadicApprox::zero(4, 3), DomainError);
}

TEST(Padic, Embedding) {
  const PadicApprox half = padic_from_rational(Rational(1, 2), 3, 4);
  EXPECT_EQ(half.valuation(), 0);
  EXPECT_EQ(half.unit(), 41);
  const PadicApprox e = padic_from_rational(18, 3, 4);
  EXPECT_EQ(e.valuation(), 2);
  EXPECT_EQ(e.unit(), 2);
  EXPECT_EQ(e.absolute_precision(), 6);
  const PadicApprox z = padic_from_rational(0, 5, 6);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.absolute_precision(), 6);
  EXPECT_EQ(padic_from_rational(Rational(2, 9), 3, 3).valuation(), -2);
  EXPECT_EQ(half.to_string(), "41 + O(3^4)");
  EXPECT_EQ(e.to_string(), "3^2 * 2 + O(3^6)");
}

TEST(Padic, ZeroAndPrecisionRules) {
  const PadicApprox a = padic_from_rational(Rational(7, 5), 3, 6);
  const PadicApprox d = a - a;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.absolute_precision(), 6);
  EXPECT_THROW(d.valuation(), PrecisionExhausted);
  EXPECT_THROW(d.unit(), PrecisionExhausted);

  const PadicApprox u = PadicApprox::from_unit(3, 0, 5, 6);
  const PadicApprox w = PadicApprox::from_unit(3, 2, 7, 4);
  const PadicApprox prod = u * w;
  EXPECT_EQ(prod.valuation(), 2);
  EXPECT_EQ(prod.relative_precision(), 4);

  const PadicApprox half = padic_from_rational(Rational(1, 2), 3, 4);
  const PadicApprox sum = half + half;
  EXPECT_EQ(sum.residue(), 1);
  EXPECT_EQ(sum.absolute_precision(), 4);

  // 1 + 80 and 1 cancel down to 3^4 * 1 with only what the inputs carry.
  const PadicApprox x = PadicApprox::from_residue(3, 82, 6);
  const PadicApprox y = PadicApprox::from_residue(3, 1, 6);
  EXPECT_EQ((x - y).valuation(), 4);
  EXPECT_EQ((x - y).absolute_precision(), 6);

  EXPECT_THROW(half / d, DivisionByZero);
  EXPECT_THROW(half + padic_from_rational(1, 5, 4), DomainError);
  EXPECT_THROW(padic_from_rational(Rational(1, 3), 3, 4).residue(), DomainError);
}

TEST(Padic, Powers) {
  const PadicApprox four = PadicApprox::from_residue(3, 4, 4);
  // 262144 = 3236 * 81 + 28; 13 is 4^4 mod 81.
  EXPECT_EQ(padic_pow(four, 9).residue(), 28);
  EXPECT_EQ(padic_pow(four, 4).residue(), 13);
  EXPECT_EQ(padic_pow(four, 0).residue(), 1);
  EXPECT_TRUE(padic_pow(PadicApprox::zero(3, 4), 5).is_zero());
  EXPECT_EQ(prime_power(3, 4), 81);
}

TEST(Padic, Distance) {
  const PadicApprox a = PadicApprox::from_residue(3, 41, 4);
  EXPECT_EQ(*padic_distance(a, PadicApprox::from_residue(3, 14, 4)).valuation, 3);
  const auto same = padic_distance(a, a);
  EXPECT_TRUE(same.indistinguishable());
  EXPECT_EQ(same.agreed_digits(), 4);
  EXPECT_EQ(*padic_distance(PadicApprox::from_residue(3, 1, 8), PadicApprox::from_residue(3, 82, 8)).valuation, 4);
}

TEST(Padic, Truncation) {
  const PadicApprox a = padic_from_rational(Rational(-4, 5), 3, 8);
  const PadicApprox t = a.truncated(3);
  EXPECT_EQ(t.absolute_precision(), 3);
  EXPECT_TRUE(agree(a, t, 3));
  EXPECT_TRUE(known_divisible(PadicApprox::from_residue(3, 27, 6), 3));
  EXPECT_FALSE(known_divisible(PadicApprox::from_residue(3, 27, 6), 4));
  EXPECT_FALSE(known_divisible(PadicApprox::zero(3, 2), 4));
  EXPECT_TRUE(known_divisible(PadicApprox::zero(3, 4), 4));
}

// Embedding commutes with field operations up to the tracked precision, and
// the tracked precision is never larger than the inputs allow.
TEST(Padic, EmbeddingIsHomomorphism) {
  std::mt19937_64 rng(99);
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Rational a = random_rational(rng), b = random_rational(rng);
      const long K = 6;
      const PadicApprox pa = padic_from_rational(a, p, K), pb = padic_from_rational(b, p, K);
      const PadicApprox s = pa + pb;
      EXPECT_TRUE(agree(s, padic_from_rational(a + b, p, 40), s.absolute_precision())) << a << " + " << b;
      if (a != 0 && b != 0) {
        const PadicApprox m = pa * pb;
        EXPECT_EQ(m.valuation(), valuation_of(a * b, p));
        EXPECT_LE(m.relative_precision(), K);
        EXPECT_TRUE(agree(m, padic_from_rational(a * b, p, 40), m.absolute_precision()));
        const PadicApprox qd = pa / pb;
        EXPECT_TRUE(agree(qd, padic_from_rational(a / b, p, 40), qd.absolute_precision()));
      }
    }
  }
}
