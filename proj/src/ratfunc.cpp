#include "qeuler/ratfunc.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFuncQ::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyQ::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const PolyQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  if (den_.leading() != 1) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFuncQ::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) {
    throw PoleError("pole of " + to_string() + " at q = " + q0.get_str());
  }
  return num_.eval(q0) / d;
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFuncQ(den_, num_);
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& rhs) { return *this += -rhs; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFuncQ();
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& rhs) { return *this *= rhs.inverse(); }

std::string RatFuncQ::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncQ pow(const RatFuncQ& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  return RatFuncQ(pow(base.num(), static_cast<unsigned long>(e)),
                  pow(base.den(), static_cast<unsigned long>(e)));
}

}  // namespace qeuler
