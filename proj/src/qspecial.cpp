#include "qeuler/qspecial.hpp"

#include "qeuler/binomial.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

RatFuncQ bracket_nonnegative(long n) {
  std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
  return RatFuncQ(PolyQ(std::move(ones)));
}

}  // namespace

RatFuncQ q_bracket(long n, QBase base) {
  RatFuncQ direct;
  if (n >= 0) {
    direct = bracket_nonnegative(n);
  } else {
    // [-m]_q = -q^{-m} [m]_q
    direct = -bracket_nonnegative(-n) / pow(RatFuncQ::q(), -n);
  }
  if (base == QBase::q) return direct;
  // [n]_{1/q} = q^{1-n} [n]_q
  return direct * pow(RatFuncQ::q(), 1 - n);
}

EulerTable& EulerTable::shared() {
  static EulerTable table;
  return table;
}

long EulerTable::computed_up_to() const {
  std::lock_guard lock(mutex_);
  return static_cast<long>(numbers_.size()) - 1;
}

void EulerTable::extend_numbers(long n) {
  if (numbers_.empty()) numbers_.emplace_back(1);
  const RatFuncQ q = RatFuncQ::q();
  const RatFuncQ one_plus_q = RatFuncQ(PolyQ{1, 1});
  while (static_cast<long>(numbers_.size()) <= n) {
    const long m = static_cast<long>(numbers_.size());
    RatFuncQ acc;
    for (long l = 0; l < m; ++l) {
      acc += RatFuncQ(Rational(binomial(m, l))) * numbers_[static_cast<std::size_t>(l)];
    }
    numbers_.push_back(-(q * acc) / one_plus_q);
  }
}

const RatFuncQ& EulerTable::number(long n) {
  if (n < 0) throw DomainError("q-Euler number index must be non-negative");
  std::lock_guard lock(mutex_);
  extend_numbers(n);
  return numbers_[static_cast<std::size_t>(n)];
}

const XPolyQ& EulerTable::poly(long n) {
  if (n < 0) throw DomainError("q-Euler polynomial index must be non-negative");
  std::lock_guard lock(mutex_);
  extend_numbers(n);
  while (static_cast<long>(polys_.size()) <= n) {
    const long m = static_cast<long>(polys_.size());
    std::vector<RatFuncQ> coeffs(static_cast<std::size_t>(m + 1));
    for (long l = 0; l <= m; ++l) {
      coeffs[static_cast<std::size_t>(l)] =
          RatFuncQ(Rational(binomial(m, l))) * numbers_[static_cast<std::size_t>(m - l)];
    }
    polys_.emplace_back(std::move(coeffs));
  }
  return polys_[static_cast<std::size_t>(n)];
}

void EulerTable::seed(std::span<const RatFuncQ> numbers) {
  std::lock_guard lock(mutex_);
  for (std::size_t i = numbers_.size(); i < numbers.size(); ++i) numbers_.push_back(numbers[i]);
}

const RatFuncQ& euler_number(long n) { return EulerTable::shared().number(n); }

const XPolyQ& euler_poly(long n) { return EulerTable::shared().poly(n); }

RatFuncQ euler_poly_integral01_termwise(long n) { return euler_poly(n).integrate_0_to_1(); }

RatFuncQ euler_poly_integral01_closed(long n) {
  return -q_bracket(2, QBase::q_inverse) * euler_number(n + 1) / RatFuncQ(n + 1);
}

RatFuncQ euler_poly_integral01(long n) {
  RatFuncQ termwise = euler_poly_integral01_termwise(n);
  if (termwise != euler_poly_integral01_closed(n)) {
    throw InternalInconsistency("integral of E_" + std::to_string(n) +
                                "(x) over [0,1]: termwise and closed form disagree");
  }
  return termwise;
}

Rational beta_exact(long a, long b) {
  if (a < 1 || b < 1) throw DomainError("beta_exact requires integer arguments >= 1");
  const auto ua = static_cast<unsigned long>(a);
  const auto ub = static_cast<unsigned long>(b);
  Rational out(factorial(ua - 1) * factorial(ub - 1), factorial(ua + ub - 1));
  out.canonicalize();
  return out;
}

Rational classical_euler_oracle(long n) {
  if (n < 0) throw DomainError("Euler number index must be non-negative");
  std::vector<Rational> e{Rational(1)};
  for (long m = 1; m <= n; ++m) {
    Rational acc(0);
    for (long l = 0; l < m; ++l) acc += Rational(binomial(m, l)) * e[static_cast<std::size_t>(l)];
    e.push_back(-acc / 2);
  }
  return e[static_cast<std::size_t>(n)];
}

}  // namespace qeuler
