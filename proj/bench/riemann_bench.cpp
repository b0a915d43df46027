// Serial reference vs OpenMP Riemann-sum kernel, word and bignum residues.
// Argument: level N (p^N terms, p = 3).

#include "qeuler/kernels.hpp"
#include "qeuler/rational.hpp"

#include <benchmark/benchmark.h>

using namespace qeuler;
using namespace qeuler::kernels;

namespace {

RiemannInput make_input(int level, long exponent, long degree) {
  RiemannInput in;
  mpz_ui_pow_ui(in.modulus.get_mpz_t(), 3, static_cast<unsigned long>(exponent));
  in.ratio = 4;
  for (long i = 0; i <= degree; ++i) in.coefficients.push_back(BigInt(i + 1));
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), 3, static_cast<unsigned long>(level));
  in.count = count.get_ui();
  return in;
}

// 3^30 fits a word; 3^60 does not.
constexpr long kWordExponent = 30;
constexpr long kBigExponent = 60;

void BM_Serial(benchmark::State& state, long exponent, Arithmetic arith) {
  const RiemannInput in = make_input(static_cast<int>(state.range(0)), exponent, 4);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sums_serial(in, arith));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * in.count));
}

void BM_Parallel(benchmark::State& state, long exponent, Arithmetic arith) {
  const RiemannInput in = make_input(static_cast<int>(state.range(0)), exponent, 4);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sums_parallel(in, 0, arith));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * in.count));
  state.counters["threads"] = thread_count();
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, word, kWordExponent, Arithmetic::word)->DenseRange(6, 12, 2);
BENCHMARK_CAPTURE(BM_Parallel, word, kWordExponent, Arithmetic::word)->DenseRange(6, 12, 2);
BENCHMARK_CAPTURE(BM_Serial, big, kBigExponent, Arithmetic::big)->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(BM_Parallel, big, kBigExponent, Arithmetic::big)->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
