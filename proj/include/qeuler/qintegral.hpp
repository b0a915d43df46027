#pragma once

#include "qeuler/padic.hpp"
#include "qeuler/xpoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qeuler {

// bosonic: the q-Volkenborn measure mu_q, Riemann sums weighted by q^xi and
// normalized by [p^N]_q. fermionic: the same with q replaced by -q.
enum class MeasureKind { bosonic, fermionic };

std::string to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view text);

// Prime, q, and precision settings shared by every p-adic computation.
struct PadicContext {
  unsigned long p = 3;
  Rational q = 4;
  long precision = 6;  // absolute digits requested
  long guard = 4;
  int max_level = 12;
  std::uint64_t cost_cap = 1'000'000;  // largest admissible p^N
  bool parallel = true;

  PrecisionBudget budget() const { return {precision, guard}; }
  // Throws DomainError unless p is an odd prime, v_p(q - 1) >= 1,
  // precision >= 1 and guard >= 2.
  void validate() const;
};

// Polynomial integrand f(xi) with p-integral rational coefficients.
class Integrand {
 public:
  explicit Integrand(std::vector<Rational> coefficients);

  // (x0 + xi)^n
  static Integrand shifted_monomial(long n, const Rational& x0);
  // Substitutes q = q0 into every coefficient of f.
  static Integrand from_xpoly(const XPolyQ& f, const Rational& q0);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

struct IntegralRequest {
  MeasureKind kind = MeasureKind::fermionic;
  Integrand integrand = Integrand::shifted_monomial(0, 0);
  PadicContext context;
  // Fixes the working modulus exponent at every level instead of deriving it
  // from the budget. Only meant for demonstrating under-budgeted sums.
  std::optional<long> working_exponent;
};

struct LevelTrace {
  int level = 0;
  PadicApprox value;
  std::optional<PadicDistance> distance_to_previous;
};

struct IntegralResult {
  PadicApprox value;
  // Absolute; negative when even the p^-1 digits did not settle.
  long achieved_precision = 0;
  int levels_used = 0;
  std::vector<LevelTrace> trace;
  bool converged = false;
  std::string note;
};

// Working modulus exponent for level N.
long working_exponent(const IntegralRequest& req, int level);

// One truncated Riemann sum at level N (p^N terms). Throws CostCapExceeded
// when p^N exceeds the context's cost cap, PrecisionExhausted when the
// normalizer vanishes modulo the working modulus.
PadicApprox riemann_level(const IntegralRequest& req, int level);

// Levels N = 1, 2, ... until two consecutive level-to-level distances both
// reach the requested precision. Never throws for non-convergence: the result
// carries converged = false and the precision actually observed.
IntegralResult integrate(const IntegralRequest& req);

// B_n = integral of y^n d mu_q. Throws ConvergenceNotReached.
PadicApprox bernoulli_number_padic(long n, const PadicContext& ctx);
// E_n = integral of y^n d mu_{-q}. Throws ConvergenceNotReached.
PadicApprox euler_number_padic(long n, const PadicContext& ctx);

// Persistent store for computed moments, keyed by measure, index and the
// full context.
class MomentCache {
 public:
  virtual ~MomentCache() = default;
  virtual std::optional<PadicApprox> find(MeasureKind kind, long n, const PadicContext& ctx) = 0;
  virtual void store(MeasureKind kind, long n, const PadicContext& ctx, const PadicApprox& value) = 0;
};

// p-adic values for the scalar identities at q = ctx.q.
//
// euler(n) is the exact E_n evaluated at q and embedded; moment(n) is the
// integral of x^n for the chosen measure: E_n again for the fermionic
// measure, the Riemann-sum limit B_n for the bosonic one. Moments are
// memoized; copies share the memo and are safe to use from several threads.
class PadicMoments {
 public:
  PadicMoments(MeasureKind kind, PadicContext ctx, MomentCache* cache = nullptr);

  MeasureKind kind() const noexcept { return kind_; }
  const PadicContext& context() const noexcept { return ctx_; }
  // Relative precision used when embedding exact values.
  long embedding_precision() const noexcept { return ctx_.precision + ctx_.guard; }

  PadicApprox embed(const RatFuncQ& c) const;
  PadicApprox euler(long n) const;
  PadicApprox moment(long n) const;
  PadicApprox zero() const;
  // Numeric integral of f (q substituted) by adaptive Riemann sums.
  // Throws ConvergenceNotReached.
  PadicApprox integral(const XPolyQ& f) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<long, PadicApprox> moments;
  };

  MeasureKind kind_;
  PadicContext ctx_;
  MomentCache* cache_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace qeuler
