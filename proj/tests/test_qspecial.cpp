#include "qeuler/binomial.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qspecial.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace qeuler;

namespace {

const PolyQ q = PolyQ::variable();
const PolyQ one = PolyQ::constant(1);

// Stirling numbers of the second kind by their own recurrence.
BigInt stirling2(long n, long k) {
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return k <= n ? s[n][k] : BigInt(0);
}

// [2]_q / (1 + q e^t) expanded in powers of (e^t - 1):
//   E_n = sum_k k! S(n, k) (-q/(1+q))^k.
RatFuncQ euler_by_stirling(long n) {
  const RatFuncQ ratio = -RatFuncQ::q() / q_bracket(2);
  RatFuncQ acc;
  for (long k = 0; k <= n; ++k) acc += RatFuncQ(Rational(factorial(k) * stirling2(n, k))) * pow(ratio, k);
  return acc;
}

}  // namespace

TEST(QBracket, Values) {
  EXPECT_EQ(q_bracket(3), RatFuncQ(PolyQ({1, 1, 1})));
  EXPECT_TRUE(q_bracket(0).is_zero());
  EXPECT_EQ(q_bracket(2, QBase::q_inverse), RatFuncQ(one + q, q));
  EXPECT_EQ(q_bracket(-1), RatFuncQ(-one, q));
  for (long n = -4; n <= 6; ++n) EXPECT_EQ(q_bracket(n).eval(1), n);
}

TEST(EulerNumbers, Table) {
  EXPECT_EQ(euler_number(0), RatFuncQ(1));
  EXPECT_EQ(euler_number(1), RatFuncQ(-q, one + q));
  EXPECT_EQ(euler_number(2), RatFuncQ(q * (q - one), pow(one + q, 2)));
  EXPECT_EQ(euler_number(3), RatFuncQ(-q * PolyQ({1, -4, 1}), pow(one + q, 3)));
  EXPECT_EQ(euler_number(3).eval(4), Rational(-4, 125));
}

TEST(EulerNumbers, MatchStirlingClosedForm) {
  for (long n = 0; n <= 16; ++n) EXPECT_EQ(euler_number(n), euler_by_stirling(n)) << "n=" << n;
}

TEST(EulerNumbers, ClassicalLimit) {
  EXPECT_EQ(classical_euler_oracle(0), 1);
  EXPECT_EQ(classical_euler_oracle(1), Rational(-1, 2));
  EXPECT_EQ(classical_euler_oracle(2), 0);
  EXPECT_EQ(classical_euler_oracle(3), Rational(1, 4));
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(euler_number(n).eval(1), classical_euler_oracle(n));
}

TEST(EulerPolys, Table) {
  const XPolyQ x = XPolyQ::x();
  EXPECT_EQ(euler_poly(0), XPolyQ(RatFuncQ(1)));
  EXPECT_EQ(euler_poly(1), x + euler_number(1));
  EXPECT_EQ(euler_poly(2), x * x + RatFuncQ(2) * euler_number(1) * x + euler_number(2));
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(euler_poly(n).eval_at(0), euler_number(n));
}

TEST(EulerPolys, ReflectionAtOne) {
  // q E_n(1) + E_n = 0 for n >= 1.
  for (long n = 1; n <= 12; ++n) {
    EXPECT_TRUE((RatFuncQ::q() * euler_poly(n).eval_at(1) + euler_number(n)).is_zero()) << n;
  }
}

TEST(EulerPolys, AdditionTheorem) {
  // E_n(x + 1) = sum_l C(n, l) E_l(x).
  for (long n = 0; n <= 8; ++n) {
    XPolyQ sum;
    for (long l = 0; l <= n; ++l) sum += RatFuncQ(Rational(binomial(n, l))) * euler_poly(l);
    EXPECT_EQ(euler_poly(n).shift_compose(1), sum);
  }
}

TEST(EulerPolys, IntegralRoutes) {
  EXPECT_EQ(euler_poly_integral01(0), RatFuncQ(1));
  EXPECT_EQ(euler_poly_integral01(1), RatFuncQ(one - q, PolyQ({2, 2})));
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(euler_poly_integral01_termwise(n), euler_poly_integral01_closed(n));
}

TEST(EulerTable, SeedAndConcurrency) {
  EulerTable fresh;
  std::vector<RatFuncQ> prefix;
  for (long n = 0; n <= 5; ++n) prefix.push_back(euler_number(n));
  fresh.seed(prefix);
  EXPECT_EQ(fresh.computed_up_to(), 5);
  EXPECT_EQ(fresh.number(9), euler_number(9));

  EulerTable shared;
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      ok[static_cast<std::size_t>(t)] = shared.poly(10 - t) == euler_poly(10 - t) && shared.number(12) == euler_number(12);
    });
  }
  for (auto& th : pool) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(Beta, Values) {
  EXPECT_EQ(beta_exact(1, 1), 1);
  EXPECT_EQ(beta_exact(2, 3), Rational(1, 12));
  EXPECT_EQ(beta_exact(3, 3), Rational(1, 30));
  for (long k = 1; k <= 10; ++k) EXPECT_EQ(beta_exact(k + 1, k + 1), Rational(1) / (Rational(2 * k + 1) * Rational(binomial(2 * k, k))));
  EXPECT_THROW(beta_exact(0, 2), DomainError);
}
