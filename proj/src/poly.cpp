#include "qeuler/poly.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>

namespace qeuler {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

std::string power_suffix(std::string_view var, std::size_t i) {
  if (i == 0) return {};
  std::string s(var);
  if (i > 1) s += "^" + std::to_string(i);
  return s;
}

}  // namespace

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  // Rational(a, b) built from raw integers is not reduced; gmp expects it to be.
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

PolyQ::PolyQ(std::initializer_list<Rational> coefficients) : PolyQ(std::vector<Rational>(coefficients)) {}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::variable() { return monomial(1, 1); }

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& PolyQ::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& PolyQ::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

bool PolyQ::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

PolyQ PolyQ::monic() const {
  if (is_zero() || leading() == 1) return *this;
  PolyQ out = *this;
  const Rational inv = Rational(1) / leading();
  out *= inv;
  return out;
}

Rational PolyQ::eval(const Rational& q0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(out));
}

std::string PolyQ::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += power_suffix(var, i);
    } else if (mag.get_den() == 1) {
      s += mag.get_str() + power_suffix(var, i);
    } else {
      s += "(" + mag.get_str() + ")" + power_suffix(var, i);
    }
  }
  return s;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = Rational(1) / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + db] * inv_lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * b.coeff(j);
  }
  rem.resize(db);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ divide_exact(const PolyQ& a, const PolyQ& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw InternalInconsistency("inexact polynomial division");
  return quot;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

PolyQ pow(const PolyQ& base, unsigned long e) {
  PolyQ result = PolyQ::constant(1);
  PolyQ b = base;
  while (e > 0) {
    if (e & 1UL) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

}  // namespace qeuler
