#pragma once

#include "qeuler/rational.hpp"

#include <optional>
#include <string>

namespace qeuler {

// Element of Q_p known to finite precision.
//
// A nonzero value is p^v * u with u a unit known modulo p^K; K is the relative
// precision and v + K the absolute precision (the value is known modulo
// p^{v+K}). The zero element means "zero modulo p^A" and only carries its
// absolute precision A. Precision only ever shrinks through arithmetic.
class PadicApprox {
 public:
  // Placeholder: zero modulo 3^0, i.e. nothing known.
  PadicApprox() = default;

  // p must be an odd prime (DomainError otherwise).
  static PadicApprox zero(unsigned long p, long absolute_precision);
  // p^valuation * unit with relative precision; unit is reduced mod p^precision
  // and must be coprime to p.
  static PadicApprox from_unit(unsigned long p, long valuation, const BigInt& unit, long precision);
  // An integer residue known modulo p^absolute_precision.
  static PadicApprox from_residue(unsigned long p, const BigInt& residue, long absolute_precision);

  unsigned long prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return zero_; }
  // Throw PrecisionExhausted on the zero element.
  long valuation() const;
  const BigInt& unit() const;
  long relative_precision() const;
  long absolute_precision() const noexcept { return zero_ ? abs_precision_ : valuation_ + precision_; }

  // The value modulo p^absolute_precision when it lies in Z_p.
  // Throws DomainError for negative valuation.
  BigInt residue() const;

  // Drops digits so that absolute precision is at most `absolute`.
  PadicApprox truncated(long absolute) const;

  PadicApprox operator-() const;
  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);
  PadicApprox& operator+=(const PadicApprox& rhs) { return *this = *this + rhs; }
  PadicApprox& operator-=(const PadicApprox& rhs) { return *this = *this - rhs; }
  PadicApprox& operator*=(const PadicApprox& rhs) { return *this = *this * rhs; }
  PadicApprox& operator/=(const PadicApprox& rhs) { return *this = *this / rhs; }

  // Structural equality: same prime, same state, same digits and precision.
  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

  // "3^2 * 41 + O(3^6)", "0 + O(3^7)".
  std::string to_string() const;

 private:
  unsigned long p_ = 3;
  bool zero_ = true;
  long valuation_ = 0;
  BigInt unit_ = 0;
  long precision_ = 0;      // relative, nonzero values only
  long abs_precision_ = 0;  // zero element only
};

bool is_odd_prime(unsigned long p);
void require_odd_prime(unsigned long p);

BigInt prime_power(unsigned long p, long e);

// Number of times p divides a nonzero integer.
long valuation_of(const BigInt& z, unsigned long p);
long valuation_of(const Rational& r, unsigned long p);

// Embeds a rational with relative precision K. Zero maps to zero modulo p^K.
PadicApprox padic_from_rational(const Rational& r, unsigned long p, long precision);

PadicApprox padic_pow(const PadicApprox& a, unsigned long e);

// v_p(a - b) or, if the difference is zero to the available precision,
// no valuation. `cap` is the absolute precision of the difference.
struct PadicDistance {
  std::optional<long> valuation;
  long cap = 0;

  bool indistinguishable() const noexcept { return !valuation.has_value(); }
  // The number of digits the two values are known to share.
  long agreed_digits() const noexcept { return valuation.value_or(cap); }
};

PadicDistance padic_distance(const PadicApprox& a, const PadicApprox& b);

// Digits requested from an integral plus guard digits carried through the
// Riemann sums. A bosonic level N divides by [p^N]_q, which has valuation N
// when v_p(q - 1) >= 1, so that level needs N extra digits.
struct PrecisionBudget {
  long target = 6;
  long guard = 4;

  long working_exponent(long division_valuation) const { return target + guard + division_valuation; }
};

// Whether |a|_p <= p^{-digits} is established at the available precision.
bool known_divisible(const PadicApprox& a, long digits);

}  // namespace qeuler
