#pragma once

#include "qeuler/ratfunc.hpp"
#include "qeuler/xpoly.hpp"

#include <deque>
#include <mutex>

namespace qeuler {

enum class QBase { q, q_inverse };

// q-bracket [n]_q = (1 - q^n)/(1 - q). For n >= 0 this is 1 + q + ... + q^{n-1};
// negative n is handled as a rational function. With QBase::q_inverse the
// base is 1/q, e.g. [2]_{1/q} = (1 + q)/q.
RatFuncQ q_bracket(long n, QBase base = QBase::q);

// Memoized tables of the weight-0 q-Euler numbers E_n and polynomials E_n(x).
//
// The numbers satisfy E_0 = 1 and, for n >= 1,
//   (1 + q) E_n + q * sum_{l<n} C(n, l) E_l = 0,
// which is the umbral relation q (E + 1)^n + E_n = [2]_q [n = 0].
// The polynomials are E_n(x) = sum_l C(n, l) x^l E_{n-l}.
//
// Entries are appended under a lock and never move, so returned references
// stay valid for the table's lifetime.
class EulerTable {
 public:
  const RatFuncQ& number(long n);
  const XPolyQ& poly(long n);
  long computed_up_to() const;

  // Adopts precomputed numbers (e.g. from a cache) beyond the current prefix.
  void seed(std::span<const RatFuncQ> numbers);

  // Process-wide instance used by the free functions below.
  static EulerTable& shared();

 private:
  void extend_numbers(long n);

  mutable std::mutex mutex_;
  std::deque<RatFuncQ> numbers_;
  std::deque<XPolyQ> polys_;
};

const RatFuncQ& euler_number(long n);
const XPolyQ& euler_poly(long n);

// Integral of E_n(x) over [0, 1] by termwise antiderivative.
RatFuncQ euler_poly_integral01_termwise(long n);
// The closed form -[2]_{1/q} E_{n+1} / (n + 1).
RatFuncQ euler_poly_integral01_closed(long n);
// Both routes; throws InternalInconsistency if they differ.
RatFuncQ euler_poly_integral01(long n);

// B(a, b) = (a-1)!(b-1)!/(a+b-1)! for integers a, b >= 1; DomainError otherwise.
Rational beta_exact(long a, long b);

// Classical Euler numbers E_n(0) from 2/(e^t + 1): E_0 = 1 and
// sum_{l<=n} C(n, l) E_l + E_n = 0. Uses nothing from EulerTable.
Rational classical_euler_oracle(long n);

}  // namespace qeuler
