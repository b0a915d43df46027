#include "qeuler/xpoly.hpp"

#include "qeuler/binomial.hpp"

namespace qeuler {

namespace {

const RatFuncQ& zero_ratfunc() {
  static const RatFuncQ zero;
  return zero;
}

}  // namespace

XPolyQ::XPolyQ(std::vector<RatFuncQ> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPolyQ::XPolyQ(const RatFuncQ& c) : coeffs_{c} { trim(); }

XPolyQ XPolyQ::monomial(const RatFuncQ& c, std::size_t degree) {
  std::vector<RatFuncQ> v(degree + 1);
  v[degree] = c;
  return XPolyQ(std::move(v));
}

void XPolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RatFuncQ& XPolyQ::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_ratfunc();
}

XPolyQ XPolyQ::differentiate() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<RatFuncQ> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * RatFuncQ(static_cast<long>(i));
  }
  return XPolyQ(std::move(out));
}

RatFuncQ XPolyQ::integrate_0_to_1() const {
  RatFuncQ acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    acc += coeffs_[i] * RatFuncQ(Rational(1, static_cast<unsigned long>(i + 1)));
  }
  return acc;
}

RatFuncQ XPolyQ::eval_at(const Rational& x0) const {
  RatFuncQ acc;
  const RatFuncQ x0f(x0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0f;
    acc += *it;
  }
  return acc;
}

XPolyQ XPolyQ::shift_compose(const Rational& shift) const {
  // sum_i c_i (x + s)^i = sum_j x^j sum_{i >= j} C(i, j) s^{i-j} c_i
  std::vector<RatFuncQ> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational factor =
          Rational(binomial(static_cast<long>(i), static_cast<long>(j))) * pow(shift, static_cast<long>(i - j));
      if (factor != 0) out[j] += coeffs_[i] * RatFuncQ(factor);
    }
  }
  return XPolyQ(std::move(out));
}

XPolyQ XPolyQ::operator-() const {
  XPolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

XPolyQ& XPolyQ::operator+=(const XPolyQ& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPolyQ& XPolyQ::operator-=(const XPolyQ& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPolyQ& XPolyQ::operator*=(const RatFuncQ& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

XPolyQ operator*(const XPolyQ& a, const XPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFuncQ> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XPolyQ(std::move(out));
}

std::string XPolyQ::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const RatFuncQ& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) s += " + ";
    first = false;
    const bool unit = c == RatFuncQ(1);
    if (!unit || i == 0) s += "[" + c.to_string() + "]";
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

XPolyQ pow(const XPolyQ& base, unsigned long e) {
  XPolyQ result(RatFuncQ(1));
  for (unsigned long i = 0; i < e; ++i) result = result * base;
  return result;
}

}  // namespace qeuler
