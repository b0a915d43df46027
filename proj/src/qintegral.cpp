#include "qeuler/qintegral.hpp"

#include "qeuler/binomial.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/kernels.hpp"
#include "qeuler/qspecial.hpp"

#include <algorithm>

namespace qeuler {

namespace {

BigInt reduce_mod(const Rational& r, unsigned long p, const BigInt& modulus) {
  if (r == 0) return 0;
  BigInt den = r.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
    throw DomainError("coefficient " + r.get_str() + " is not a p-adic integer");
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  BigInt out = BigInt(r.get_num()) * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

std::uint64_t checked_term_count(unsigned long p, int level, std::uint64_t cap) {
  std::uint64_t terms = 1;
  for (int i = 0; i < level; ++i) {
    if (terms > cap / p) {
      throw CostCapExceeded("level " + std::to_string(level) + " needs more than " + std::to_string(cap) +
                            " terms");
    }
    terms *= p;
  }
  return terms;
}

}  // namespace

std::string to_string(MeasureKind kind) { return kind == MeasureKind::bosonic ? "bosonic" : "fermionic"; }

MeasureKind parse_measure_kind(std::string_view text) {
  if (text == "bosonic") return MeasureKind::bosonic;
  if (text == "fermionic") return MeasureKind::fermionic;
  throw UsageError("unknown measure '" + std::string(text) + "' (expected bosonic or fermionic)");
}

void PadicContext::validate() const {
  require_odd_prime(p);
  if (precision < 1) throw DomainError("precision must be at least 1");
  if (guard < 2) throw DomainError("guard must be at least 2");
  if (max_level < 1) throw DomainError("max level must be at least 1");
  const Rational shift = q - 1;
  if (shift != 0 && valuation_of(shift, p) < 1) {
    throw DomainError("q = " + q.get_str() + " does not satisfy |q - 1|_p < 1 for p = " + std::to_string(p));
  }
}

Integrand::Integrand(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integrand Integrand::shifted_monomial(long n, const Rational& x0) {
  if (n < 0) throw DomainError("integrand exponent must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = Rational(binomial(n, i)) * pow(x0, n - i);
  return Integrand(std::move(c));
}

Integrand Integrand::from_xpoly(const XPolyQ& f, const Rational& q0) {
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  for (const auto& coeff : f.coefficients()) c.push_back(coeff.eval(q0));
  return Integrand(std::move(c));
}

std::string Integrand::to_string() const { return PolyQ(coeffs_).to_string("y"); }

long working_exponent(const IntegralRequest& req, int level) {
  if (req.working_exponent) return *req.working_exponent;
  // [p^N]_{-q} = (1 + q^{p^N})/(1 + q) is a unit; [p^N]_q has valuation N.
  const long division_valuation = req.kind == MeasureKind::bosonic ? level : 0;
  return req.context.budget().working_exponent(division_valuation);
}

PadicApprox riemann_level(const IntegralRequest& req, int level) {
  const PadicContext& ctx = req.context;
  ctx.validate();
  if (level < 1) throw DomainError("Riemann sum level must be at least 1");
  const std::uint64_t terms = checked_term_count(ctx.p, level, ctx.cost_cap);

  const long exponent = working_exponent(req, level);
  if (exponent < 1) throw DomainError("working modulus exponent must be positive");
  kernels::RiemannInput in;
  in.modulus = prime_power(ctx.p, exponent);
  in.count = terms;
  const Rational ratio = req.kind == MeasureKind::bosonic ? ctx.q : Rational(-ctx.q);
  in.ratio = reduce_mod(ratio, ctx.p, in.modulus);
  for (const auto& c : req.integrand.coefficients()) in.coefficients.push_back(reduce_mod(c, ctx.p, in.modulus));

  const kernels::RiemannSums sums =
      ctx.parallel ? kernels::riemann_sums_parallel(in) : kernels::riemann_sums_serial(in);
  const PadicApprox weighted = PadicApprox::from_residue(ctx.p, sums.weighted, exponent);
  const PadicApprox weights = PadicApprox::from_residue(ctx.p, sums.weights, exponent);
  if (weights.is_zero()) {
    // The normalizer vanished modulo p^exponent: the quotient is unknown.
    throw PrecisionExhausted("normalizer vanishes modulo " + std::to_string(ctx.p) + "^" + std::to_string(exponent) +
                             " at level " + std::to_string(level));
  }
  return weighted / weights;
}

IntegralResult integrate(const IntegralRequest& req) {
  req.context.validate();
  const long target = req.context.precision;
  IntegralResult result;
  int stable_steps = 0;
  for (int level = 1; level <= req.context.max_level; ++level) {
    PadicApprox value;
    try {
      value = riemann_level(req, level);
    } catch (const CostCapExceeded& e) {
      result.note = e.what();
      break;
    } catch (const PrecisionExhausted& e) {
      if (result.trace.empty()) throw;
      result.note = e.what();
      break;
    }
    LevelTrace entry{level, value, std::nullopt};
    if (!result.trace.empty()) {
      entry.distance_to_previous = padic_distance(value, result.trace.back().value);
      stable_steps = entry.distance_to_previous->agreed_digits() >= target ? stable_steps + 1 : 0;
    }
    result.trace.push_back(std::move(entry));
    if (stable_steps >= 2) {
      result.converged = true;
      break;
    }
  }
  if (result.trace.empty()) {
    throw CostCapExceeded("no admissible level: " + result.note);
  }

  const LevelTrace& last = result.trace.back();
  result.levels_used = last.level;
  long achieved = std::min(target, last.value.absolute_precision());
  int seen = 0;
  for (auto it = result.trace.rbegin(); it != result.trace.rend() && seen < 2; ++it) {
    if (!it->distance_to_previous) continue;
    achieved = std::min(achieved, it->distance_to_previous->agreed_digits());
    ++seen;
  }
  if (seen == 0) achieved = std::min(achieved, last.value.is_zero() ? 0L : last.value.valuation());
  // May be negative: digits below p^0 are only claimed when they were seen to stabilize.
  result.achieved_precision = achieved;
  result.value = last.value.truncated(result.achieved_precision);
  if (!result.converged && result.note.empty()) {
    result.note = "no two consecutive stable levels within " + std::to_string(req.context.max_level) + " levels";
  }
  return result;
}

namespace {

PadicApprox integrate_moment(MeasureKind kind, long n, const PadicContext& ctx) {
  IntegralRequest req{kind, Integrand::shifted_monomial(n, 0), ctx, std::nullopt};
  IntegralResult r = integrate(req);
  if (!r.converged) {
    throw ConvergenceNotReached(to_string(kind) + " moment " + std::to_string(n) + ": " + r.note +
                                " (achieved precision " + std::to_string(r.achieved_precision) + ")");
  }
  return r.value;
}

}  // namespace

PadicApprox bernoulli_number_padic(long n, const PadicContext& ctx) {
  return integrate_moment(MeasureKind::bosonic, n, ctx);
}

PadicApprox euler_number_padic(long n, const PadicContext& ctx) {
  return integrate_moment(MeasureKind::fermionic, n, ctx);
}

PadicMoments::PadicMoments(MeasureKind kind, PadicContext ctx, MomentCache* cache)
    : kind_(kind), ctx_(std::move(ctx)), cache_(cache), memo_(std::make_shared<Memo>()) {
  ctx_.validate();
}

PadicApprox PadicMoments::embed(const RatFuncQ& c) const {
  return padic_from_rational(c.eval(ctx_.q), ctx_.p, embedding_precision());
}

PadicApprox PadicMoments::euler(long n) const { return embed(euler_number(n)); }

PadicApprox PadicMoments::zero() const { return PadicApprox::zero(ctx_.p, embedding_precision()); }

PadicApprox PadicMoments::moment(long n) const {
  if (kind_ == MeasureKind::fermionic) return euler(n);
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->moments.find(n); it != memo_->moments.end()) return it->second;
  }
  std::optional<PadicApprox> value;
  if (cache_ != nullptr) value = cache_->find(kind_, n, ctx_);
  if (!value) {
    value = bernoulli_number_padic(n, ctx_);
    if (cache_ != nullptr) cache_->store(kind_, n, ctx_, *value);
  }
  std::lock_guard lock(memo_->mutex);
  return memo_->moments.emplace(n, *value).first->second;
}

PadicApprox PadicMoments::integral(const XPolyQ& f) const {
  IntegralRequest req{kind_, Integrand::from_xpoly(f, ctx_.q), ctx_, std::nullopt};
  IntegralResult r = integrate(req);
  if (!r.converged) {
    throw ConvergenceNotReached(to_string(kind_) + " integral of " + req.integrand.to_string() + ": " + r.note);
  }
  return r.value;
}

}  // namespace qeuler
