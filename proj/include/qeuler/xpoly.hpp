#pragma once

#include "qeuler/ratfunc.hpp"

#include <span>
#include <string>
#include <vector>

namespace qeuler {

// Polynomial in x with coefficients in Q(q). Coefficient i multiplies x^i;
// the highest stored coefficient is nonzero.
class XPolyQ {
 public:
  XPolyQ() = default;
  explicit XPolyQ(std::vector<RatFuncQ> coefficients);
  XPolyQ(const RatFuncQ& c);  // NOLINT implicit constant

  static XPolyQ monomial(const RatFuncQ& c, std::size_t degree);
  static XPolyQ x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const RatFuncQ& coeff(std::size_t i) const;
  std::span<const RatFuncQ> coefficients() const noexcept { return coeffs_; }

  XPolyQ differentiate() const;
  // Integral over [0, 1]: sum of c_i / (i + 1).
  RatFuncQ integrate_0_to_1() const;
  RatFuncQ eval_at(const Rational& x0) const;
  // The polynomial x -> f(x + shift).
  XPolyQ shift_compose(const Rational& shift) const;

  XPolyQ operator-() const;
  XPolyQ& operator+=(const XPolyQ& rhs);
  XPolyQ& operator-=(const XPolyQ& rhs);
  XPolyQ& operator*=(const RatFuncQ& c);

  friend XPolyQ operator+(XPolyQ a, const XPolyQ& b) { return a += b; }
  friend XPolyQ operator-(XPolyQ a, const XPolyQ& b) { return a -= b; }
  friend XPolyQ operator*(const XPolyQ& a, const XPolyQ& b);
  friend XPolyQ operator*(XPolyQ a, const RatFuncQ& c) { return a *= c; }
  friend XPolyQ operator*(const RatFuncQ& c, XPolyQ a) { return a *= c; }
  friend bool operator==(const XPolyQ&, const XPolyQ&) = default;

  // Ascending powers of x, each coefficient in brackets unless it is 1:
  // "[(-q)/(1 + q)] + x".
  std::string to_string() const;

 private:
  void trim();

  std::vector<RatFuncQ> coeffs_;
};

XPolyQ pow(const XPolyQ& base, unsigned long e);

}  // namespace qeuler
