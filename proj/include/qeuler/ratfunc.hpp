#pragma once

#include "qeuler/poly.hpp"

#include <string>

namespace qeuler {

// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic, so two
// rational functions are equal exactly when their fields compare equal.
// Zero is 0/1.
class RatFuncQ {
 public:
  RatFuncQ() : den_(PolyQ::constant(1)) {}
  // Throws DivisionByZero when den is the zero polynomial.
  RatFuncQ(PolyQ num, PolyQ den);
  RatFuncQ(const PolyQ& p) : RatFuncQ(p, PolyQ::constant(1)) {}  // NOLINT implicit
  RatFuncQ(const Rational& c) : RatFuncQ(PolyQ::constant(c)) {}  // NOLINT implicit
  RatFuncQ(long c) : RatFuncQ(Rational(c)) {}                    // NOLINT implicit

  static RatFuncQ q() { return RatFuncQ(PolyQ::variable()); }

  const PolyQ& num() const noexcept { return num_; }
  const PolyQ& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // Throws PoleError when den(q0) = 0.
  Rational eval(const Rational& q0) const;

  // Throws DivisionByZero for the zero function.
  RatFuncQ inverse() const;

  RatFuncQ operator-() const;
  RatFuncQ& operator+=(const RatFuncQ& rhs);
  RatFuncQ& operator-=(const RatFuncQ& rhs);
  RatFuncQ& operator*=(const RatFuncQ& rhs);
  RatFuncQ& operator/=(const RatFuncQ& rhs);

  friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
  friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
  friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
  friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
  friend bool operator==(const RatFuncQ&, const RatFuncQ&) = default;

  // "(num)/(den)" with both parts in ascending powers, or just the numerator
  // when den = 1. Example: "(-q)/(1 + q)".
  std::string to_string() const;

 private:
  void normalize();

  PolyQ num_;
  PolyQ den_;
};

RatFuncQ pow(const RatFuncQ& base, long e);

}  // namespace qeuler
