#pragma once

#include "qeuler/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler {

// Dense univariate polynomial over Q in the indeterminate q. Coefficient i
// multiplies q^i. The highest stored coefficient is never zero; the zero
// polynomial stores nothing.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);
  PolyQ(std::initializer_list<Rational> coefficients);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, std::size_t degree);
  // The indeterminate q itself.
  static PolyQ variable();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  bool is_one() const;

  PolyQ monic() const;
  Rational eval(const Rational& q0) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

  // Ascending powers with explicit signs, e.g. "-q + q^2" or "1/2 - 3q".
  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Euclidean division a = quotient*b + remainder with deg remainder < deg b.
// Throws DivisionByZero when b is zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

// Exact quotient; throws InternalInconsistency if b does not divide a.
PolyQ divide_exact(const PolyQ& a, const PolyQ& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
PolyQ poly_gcd(PolyQ a, PolyQ b);

PolyQ pow(const PolyQ& base, unsigned long e);

}  // namespace qeuler
