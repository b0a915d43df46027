#include "qeuler/kernels.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qeuler::kernels {

namespace {

__extension__ using u128 = unsigned __int128;

// Residues below 2^63 in a machine word.
struct WordMod {
  using value_type = std::uint64_t;
  std::uint64_t m;

  explicit WordMod(const BigInt& modulus) : m(modulus.get_ui()) {}

  value_type from(const BigInt& z) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), m);
    return r.get_ui();
  }
  value_type from_index(std::uint64_t i) const { return i % m; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % m; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
  }
  value_type pow(value_type base, std::uint64_t e) const {
    value_type result = one();
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  BigInt to_big(value_type v) const { return BigInt(static_cast<unsigned long>(v)); }
};

struct BigMod {
  using value_type = BigInt;
  BigInt m;

  explicit BigMod(const BigInt& modulus) : m(modulus) {}

  value_type from(const BigInt& z) const {
    BigInt r;
    mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  value_type from_index(std::uint64_t i) const { return from(BigInt(static_cast<unsigned long>(i))); }
  value_type zero() const { return 0; }
  value_type one() const { return from(1); }
  value_type add(const value_type& a, const value_type& b) const {
    BigInt s = a + b;
    if (s >= m) s -= m;
    return s;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    BigInt r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  value_type pow(const value_type& base, std::uint64_t e) const {
    BigInt r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
    return r;
  }
  BigInt to_big(const value_type& v) const { return v; }
};

template <class Mod>
struct Partial {
  typename Mod::value_type weighted;
  typename Mod::value_type weights;
};

template <class Mod>
Partial<Mod> sum_range(const Mod& mod, const std::vector<typename Mod::value_type>& coeffs,
                       const typename Mod::value_type& ratio, std::uint64_t begin, std::uint64_t end) {
  Partial<Mod> out{mod.zero(), mod.zero()};
  auto power = mod.pow(ratio, begin);
  for (std::uint64_t xi = begin; xi < end; ++xi) {
    const auto x = mod.from_index(xi);
    auto f = mod.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) f = mod.add(mod.mul(f, x), *it);
    out.weighted = mod.add(out.weighted, mod.mul(f, power));
    out.weights = mod.add(out.weights, power);
    power = mod.mul(power, ratio);
  }
  return out;
}

template <class Mod>
RiemannSums run_serial(const RiemannInput& in) {
  const Mod mod(in.modulus);
  std::vector<typename Mod::value_type> coeffs;
  coeffs.reserve(in.coefficients.size());
  for (const auto& c : in.coefficients) coeffs.push_back(mod.from(c));
  const auto part = sum_range(mod, coeffs, mod.from(in.ratio), 0, in.count);
  return {mod.to_big(part.weighted), mod.to_big(part.weights)};
}

template <class Mod>
RiemannSums run_parallel(const RiemannInput& in, std::size_t chunks) {
  const Mod mod(in.modulus);
  std::vector<typename Mod::value_type> coeffs;
  coeffs.reserve(in.coefficients.size());
  for (const auto& c : in.coefficients) coeffs.push_back(mod.from(c));
  const auto ratio = mod.from(in.ratio);

  if (chunks == 0) chunks = static_cast<std::size_t>(thread_count()) * 4;
  chunks = std::clamp<std::size_t>(chunks, 1, std::max<std::uint64_t>(in.count, 1));
  const std::uint64_t step = (in.count + chunks - 1) / chunks;

  std::vector<Partial<Mod>> partials(chunks, Partial<Mod>{mod.zero(), mod.zero()});
  const auto n_chunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t begin = std::min<std::uint64_t>(static_cast<std::uint64_t>(c) * step, in.count);
    const std::uint64_t end = std::min<std::uint64_t>(begin + step, in.count);
    partials[static_cast<std::size_t>(c)] = sum_range(mod, coeffs, ratio, begin, end);
  }

  Partial<Mod> total{mod.zero(), mod.zero()};
  for (const auto& part : partials) {
    total.weighted = mod.add(total.weighted, part.weighted);
    total.weights = mod.add(total.weights, part.weights);
  }
  return {mod.to_big(total.weighted), mod.to_big(total.weights)};
}

bool use_word(const RiemannInput& in, Arithmetic arith) {
  switch (arith) {
    case Arithmetic::word:
      if (!fits_word(in.modulus)) throw DomainError("modulus does not fit the word kernel");
      return true;
    case Arithmetic::big:
      return false;
    case Arithmetic::automatic:
      break;
  }
  return fits_word(in.modulus);
}

}  // namespace

bool fits_word(const BigInt& modulus) {
  return modulus > 0 && mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 63;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

RiemannSums riemann_sums_serial(const RiemannInput& in, Arithmetic arith) {
  return use_word(in, arith) ? run_serial<WordMod>(in) : run_serial<BigMod>(in);
}

RiemannSums riemann_sums_parallel(const RiemannInput& in, std::size_t chunks, Arithmetic arith) {
  return use_word(in, arith) ? run_parallel<WordMod>(in, chunks) : run_parallel<BigMod>(in, chunks);
}

}  // namespace qeuler::kernels
