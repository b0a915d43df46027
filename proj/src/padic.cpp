#include "qeuler/padic.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>

namespace qeuler {

namespace {

BigInt mod_positive(const BigInt& z, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("residue is not invertible");
  }
  return r;
}

}  // namespace

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_odd_prime(unsigned long p) {
  if (!is_odd_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

BigInt prime_power(unsigned long p, long e) {
  if (e < 0) throw DomainError("negative exponent for prime power");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

long valuation_of(const BigInt& z, unsigned long p) {
  if (z == 0) throw DomainError("valuation of zero");
  BigInt rest = z;
  long v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation_of(const Rational& r, unsigned long p) {
  return valuation_of(BigInt(r.get_num()), p) - valuation_of(BigInt(r.get_den()), p);
}

PadicApprox PadicApprox::zero(unsigned long p, long absolute_precision) {
  require_odd_prime(p);
  PadicApprox out;
  out.p_ = p;
  out.abs_precision_ = absolute_precision;
  return out;
}

PadicApprox PadicApprox::from_residue(unsigned long p, const BigInt& residue, long absolute_precision) {
  require_odd_prime(p);
  if (absolute_precision <= 0) return zero(p, absolute_precision);
  const BigInt r = mod_positive(residue, prime_power(p, absolute_precision));
  if (r == 0) return zero(p, absolute_precision);
  const long v = valuation_of(r, p);
  BigInt u = r;
  mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), prime_power(p, v).get_mpz_t());
  return from_unit(p, v, u, absolute_precision - v);
}

PadicApprox PadicApprox::from_unit(unsigned long p, long valuation, const BigInt& unit, long precision) {
  require_odd_prime(p);
  if (precision <= 0) return zero(p, valuation + precision);
  if (mpz_divisible_ui_p(unit.get_mpz_t(), p) != 0) {
    throw DomainError("unit part must be coprime to p");
  }
  PadicApprox out;
  out.p_ = p;
  out.zero_ = false;
  out.valuation_ = valuation;
  out.precision_ = precision;
  out.unit_ = mod_positive(unit, prime_power(p, precision));
  return out;
}

long PadicApprox::valuation() const {
  if (zero_) throw PrecisionExhausted("zero to precision " + std::to_string(abs_precision_) + " has no valuation");
  return valuation_;
}

const BigInt& PadicApprox::unit() const {
  if (zero_) throw PrecisionExhausted("zero to precision " + std::to_string(abs_precision_) + " has no unit part");
  return unit_;
}

long PadicApprox::relative_precision() const {
  if (zero_) throw PrecisionExhausted("zero element has no relative precision");
  return precision_;
}

BigInt PadicApprox::residue() const {
  if (zero_) return 0;
  if (valuation_ < 0) throw DomainError("value is not a p-adic integer");
  return unit_ * prime_power(p_, valuation_);
}

PadicApprox PadicApprox::truncated(long absolute) const {
  if (absolute >= absolute_precision()) return *this;
  if (zero_ || absolute <= valuation_) return zero(p_, absolute);
  return from_unit(p_, valuation_, unit_, absolute - valuation_);
}

PadicApprox PadicApprox::operator-() const {
  if (zero_) return *this;
  return from_unit(p_, valuation_, -unit_, precision_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw DomainError("mixed primes in p-adic arithmetic");
  const long abs = std::min(a.absolute_precision(), b.absolute_precision());
  const PadicApprox* terms[2] = {&a, &b};
  std::optional<long> base;
  for (const auto* t : terms) {
    if (!t->zero_ && t->valuation_ < abs) base = std::min(base.value_or(t->valuation_), t->valuation_);
  }
  if (!base) return PadicApprox::zero(a.p_, abs);
  BigInt sum = 0;
  for (const auto* t : terms) {
    if (!t->zero_ && t->valuation_ < abs) sum += t->unit_ * prime_power(a.p_, t->valuation_ - *base);
  }
  const BigInt modulus = prime_power(a.p_, abs - *base);
  sum = mod_positive(sum, modulus);
  if (sum == 0) return PadicApprox::zero(a.p_, abs);
  const long shift = valuation_of(sum, a.p_);
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), prime_power(a.p_, shift).get_mpz_t());
  return PadicApprox::from_unit(a.p_, *base + shift, sum, abs - *base - shift);
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw DomainError("mixed primes in p-adic arithmetic");
  if (a.zero_ && b.zero_) return PadicApprox::zero(a.p_, a.abs_precision_ + b.abs_precision_);
  if (a.zero_) return PadicApprox::zero(a.p_, a.abs_precision_ + b.valuation_);
  if (b.zero_) return PadicApprox::zero(a.p_, b.abs_precision_ + a.valuation_);
  const long k = std::min(a.precision_, b.precision_);
  return PadicApprox::from_unit(a.p_, a.valuation_ + b.valuation_, a.unit_ * b.unit_, k);
}

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw DomainError("mixed primes in p-adic arithmetic");
  if (b.zero_) throw DivisionByZero("p-adic division by zero to precision " + std::to_string(b.abs_precision_));
  if (a.zero_) return PadicApprox::zero(a.p_, a.abs_precision_ - b.valuation_);
  const long k = std::min(a.precision_, b.precision_);
  const BigInt inv = inverse_mod(b.unit_, prime_power(a.p_, k));
  return PadicApprox::from_unit(a.p_, a.valuation_ - b.valuation_, a.unit_ * inv, k);
}

std::string PadicApprox::to_string() const {
  const std::string ps = std::to_string(p_);
  const std::string tail = " + O(" + ps + "^" + std::to_string(absolute_precision()) + ")";
  if (zero_) return "0" + tail;
  std::string s;
  if (valuation_ != 0) s = ps + "^" + std::to_string(valuation_) + " * ";
  return s + unit_.get_str() + tail;
}

PadicApprox padic_from_rational(const Rational& r, unsigned long p, long precision) {
  require_odd_prime(p);
  if (r == 0) return PadicApprox::zero(p, precision);
  BigInt num = r.get_num();
  BigInt den = r.get_den();
  const long vn = valuation_of(num, p);
  const long vd = valuation_of(den, p);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prime_power(p, vn).get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), prime_power(p, vd).get_mpz_t());
  const BigInt modulus = prime_power(p, precision);
  return PadicApprox::from_unit(p, vn - vd, num * inverse_mod(mod_positive(den, modulus), modulus), precision);
}

PadicApprox padic_pow(const PadicApprox& a, unsigned long e) {
  if (e == 0) {
    const long k = a.is_zero() ? std::max(a.absolute_precision(), 1L) : a.relative_precision();
    return PadicApprox::from_unit(a.prime(), 0, 1, k);
  }
  if (a.is_zero()) return PadicApprox::zero(a.prime(), a.absolute_precision() * static_cast<long>(e));
  const long k = a.relative_precision();
  BigInt u;
  mpz_powm_ui(u.get_mpz_t(), a.unit().get_mpz_t(), e, prime_power(a.prime(), k).get_mpz_t());
  return PadicApprox::from_unit(a.prime(), a.valuation() * static_cast<long>(e), u, k);
}

PadicDistance padic_distance(const PadicApprox& a, const PadicApprox& b) {
  const PadicApprox d = a - b;
  if (d.is_zero()) return {std::nullopt, d.absolute_precision()};
  return {d.valuation(), d.absolute_precision()};
}

bool known_divisible(const PadicApprox& a, long digits) {
  if (a.is_zero()) return a.absolute_precision() >= digits;
  return a.valuation() >= digits;
}

}  // namespace qeuler
