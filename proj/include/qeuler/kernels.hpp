#pragma once

#include "qeuler/rational.hpp"

#include <cstdint>
#include <vector>

namespace qeuler::kernels {

// Truncated Riemann sum over xi = 0, ..., count-1 in Z/mZ:
//   weighted = sum f(xi) r^xi,   weights = sum r^xi,
// where f is the polynomial with the given coefficients (ascending in xi),
// already reduced modulo m.
struct RiemannInput {
  BigInt modulus;
  BigInt ratio;
  std::vector<BigInt> coefficients;
  std::uint64_t count = 0;
};

struct RiemannSums {
  BigInt weighted;
  BigInt weights;

  friend bool operator==(const RiemannSums&, const RiemannSums&) = default;
};

// Residue arithmetic used by the loop. `word` needs modulus < 2^63.
enum class Arithmetic { automatic, word, big };

// Reference implementation: one pass, one multiplication per term to advance
// r^xi.
RiemannSums riemann_sums_serial(const RiemannInput& in, Arithmetic arith = Arithmetic::automatic);

// OpenMP version: the range is split into chunks, each seeded with r^start by
// fast exponentiation, and the partial sums are combined in chunk order.
// Exact residue arithmetic makes the result identical to the serial one.
// chunks = 0 picks a count from the thread pool size.
RiemannSums riemann_sums_parallel(const RiemannInput& in, std::size_t chunks = 0,
                                  Arithmetic arith = Arithmetic::automatic);

bool fits_word(const BigInt& modulus);

int thread_count();

}  // namespace qeuler::kernels
