#pragma once

#include "qeuler/rational.hpp"

namespace qeuler {

// C(n, r) from a memoized Pascal triangle. C(n, r) = 0 for r < 0 or r > n,
// and for n < 0. Summation ranges in the identities rely on this.
// Thread-safe.
BigInt binomial(long n, long r);

}  // namespace qeuler
