#include "qeuler/errors.hpp"
#include "qeuler/kernels.hpp"
#include "qeuler/padic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qeuler;
using namespace qeuler::kernels;

namespace {

// Every term recomputed from scratch: f(xi) by powers of xi, r^xi by powm.
RiemannSums naive(const RiemannInput& in) {
  BigInt weighted = 0, weights = 0;
  for (std::uint64_t xi = 0; xi < in.count; ++xi) {
    BigInt f = 0, xpow = 1;
    for (const auto& c : in.coefficients) {
      f += c * xpow;
      xpow *= static_cast<unsigned long>(xi);
    }
    BigInt rp;
    mpz_powm_ui(rp.get_mpz_t(), in.ratio.get_mpz_t(), static_cast<unsigned long>(xi), in.modulus.get_mpz_t());
    weighted += f * rp;
    weights += rp;
  }
  mpz_mod(weighted.get_mpz_t(), weighted.get_mpz_t(), in.modulus.get_mpz_t());
  mpz_mod(weights.get_mpz_t(), weights.get_mpz_t(), in.modulus.get_mpz_t());
  return {weighted, weights};
}

RiemannInput random_input(std::mt19937_64& rng, const BigInt& modulus, std::uint64_t count) {
  RiemannInput in;
  in.modulus = modulus;
  in.count = count;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  in.ratio = gr.get_z_range(modulus);
  std::uniform_int_distribution<int> deg(0, 6);
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) in.coefficients.push_back(gr.get_z_range(modulus));
  return in;
}

}  // namespace

TEST(Kernels, WordBoundary) {
  EXPECT_TRUE(fits_word(prime_power(3, 39)));
  EXPECT_FALSE(fits_word(prime_power(3, 40)));
  RiemannInput in;
  in.modulus = prime_power(3, 45);
  in.ratio = 4;
  in.count = 3;
  EXPECT_THROW(riemann_sums_serial(in, Arithmetic::word), DomainError);
}

TEST(Kernels, SerialMatchesNaive) {
  std::mt19937_64 rng(2024);
  for (const BigInt& m : {prime_power(3, 10), prime_power(5, 12), prime_power(3, 45), prime_power(7, 30)}) {
    for (std::uint64_t count : {1ULL, 2ULL, 9ULL, 81ULL, 250ULL}) {
      const RiemannInput in = random_input(rng, m, count);
      EXPECT_EQ(riemann_sums_serial(in), naive(in));
      EXPECT_EQ(riemann_sums_serial(in, Arithmetic::big), naive(in));
    }
  }
}

TEST(Kernels, ParallelIsBitIdentical) {
  std::mt19937_64 rng(7);
  for (const BigInt& m : {prime_power(3, 14), prime_power(3, 50)}) {
    for (std::uint64_t count : {1ULL, 5ULL, 243ULL, 3125ULL}) {
      const RiemannInput in = random_input(rng, m, count);
      const RiemannSums ref = riemann_sums_serial(in);
      for (std::size_t chunks : {0UL, 1UL, 2UL, 3UL, 7UL, 64UL, 5000UL}) {
        EXPECT_EQ(riemann_sums_parallel(in, chunks), ref) << "chunks=" << chunks;
      }
      if (fits_word(m)) EXPECT_EQ(riemann_sums_parallel(in, 4, Arithmetic::big), ref);
    }
  }
}

TEST(Kernels, EmptyRange) {
  RiemannInput in;
  in.modulus = 81;
  in.ratio = 4;
  in.coefficients = {1};
  in.count = 0;
  EXPECT_EQ(riemann_sums_serial(in), (RiemannSums{0, 0}));
  EXPECT_EQ(riemann_sums_parallel(in), (RiemannSums{0, 0}));
}
