#include "qeuler/identities.hpp"

#include "qeuler/binomial.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qspecial.hpp"

#include <algorithm>
#include <array>

namespace qeuler {

namespace {

constexpr std::array<IdentityInfo, 15> kIdentities{{
    {IdentityId::EQ6, "EQ6", ParamShape::k_m, 0, 0, true, false, false},
    {IdentityId::THM1, "THM1", ParamShape::k_m, 1, 1, true, false, false},
    {IdentityId::THM1_COR, "THM1_COR", ParamShape::k, 1, 0, true, false, false},
    {IdentityId::EQ103, "EQ103", ParamShape::k, 1, 0, true, false, false},
    {IdentityId::THM2, "THM2", ParamShape::k, 1, 0, true, false, false},
    {IdentityId::THM3_PRINTED, "THM3_PRINTED", ParamShape::k, 1, 0, true, false, true},
    {IdentityId::THM3_CORRECTED, "THM3_CORRECTED", ParamShape::k, 1, 0, true, false, false},
    {IdentityId::THM4, "THM4", ParamShape::k_m, 1, 1, true, true, false},
    {IdentityId::THM5_PRINTED, "THM5_PRINTED", ParamShape::k, 1, 0, true, true, true},
    {IdentityId::THM5_CORRECTED, "THM5_CORRECTED", ParamShape::k, 1, 0, true, true, false},
    {IdentityId::THM6, "THM6", ParamShape::k_m, 1, 1, false, true, false},
    {IdentityId::COR7_PRINTED, "COR7_PRINTED", ParamShape::k, 1, 0, false, true, true},
    {IdentityId::COR7_CORRECTED, "COR7_CORRECTED", ParamShape::k, 1, 0, false, true, false},
    {IdentityId::EQ7, "EQ7", ParamShape::n, 1, 0, true, false, false},
    {IdentityId::EQ8, "EQ8", ParamShape::n, 0, 0, true, false, false},
}};

RatFuncQ two_q() { return q_bracket(2); }

RatFuncQ integer(const BigInt& z) { return RatFuncQ(Rational(z)); }

RatFuncQ binom(long n, long r) { return integer(binomial(n, r)); }

RatFuncQ sign(long e) { return RatFuncQ(e % 2 == 0 ? 1L : -1L); }

RatFuncQ reciprocal(long d) { return RatFuncQ(Rational(1, static_cast<unsigned long>(d))); }

// Symbolic moments for the fermionic measure: int x^n d mu_{-q} = E_n.
struct ExactFermionic {
  RatFuncQ embed(const RatFuncQ& c) const { return c; }
  RatFuncQ euler(long n) const { return euler_number(n); }
  RatFuncQ moment(long n) const { return euler_number(n); }
  RatFuncQ zero() const { return {}; }
};

// int E_n(x) d mu = sum_l C(n, l) E_{n-l} int x^l d mu
template <class Model>
auto mixed_moment(const Model& model, long n) {
  auto acc = model.zero();
  for (long l = 0; l <= n; ++l) acc += model.embed(binom(n, l)) * model.euler(n - l) * model.moment(l);
  return acc;
}

template <class Model>
auto integrate_form(const Model& model, const EulerForm& form) {
  auto acc = model.zero();
  for (const auto& term : form) acc += model.embed(term.coefficient) * mixed_moment(model, term.index);
  return acc;
}

// int f d mu with f expanded in powers of x.
template <class Model>
auto integrate_poly(const Model& model, const XPolyQ& f) {
  auto acc = model.zero();
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    const RatFuncQ& c = f.coefficients()[i];
    if (!c.is_zero()) acc += model.embed(c) * model.moment(static_cast<long>(i));
  }
  return acc;
}

// [2]_q sum_l C(m, l) (-1)^{m-l} int x^{l+k} d mu
template <class Model>
auto two_q_alternating_moments(const Model& model, long k, long m) {
  auto acc = model.zero();
  for (long l = 0; l <= m; ++l) acc += model.embed(binom(m, l) * sign(m - l)) * model.moment(l + k);
  return model.embed(two_q()) * acc;
}

// sum_l C(k, l) (-1)^{k-l} ([2]_q int x^{k+l+1} - q int x^{k+l})
template <class Model>
auto thm5_left(const Model& model, long k) {
  auto acc = model.zero();
  const auto two = model.embed(two_q());
  const auto q = model.embed(RatFuncQ::q());
  for (long l = 0; l <= k; ++l) {
    acc += model.embed(binom(k, l) * sign(k - l)) * (two * model.moment(k + l + 1) - q * model.moment(k + l));
  }
  return acc;
}

void require_at_least(long value, long minimum, const char* what) {
  if (value < minimum) {
    throw DomainError(std::string(what) + " must be at least " + std::to_string(minimum) + ", got " +
                      std::to_string(value));
  }
}

}  // namespace

const IdentityInfo& identity_info(IdentityId id) { return kIdentities.at(static_cast<std::size_t>(id)); }

std::string_view to_string(IdentityId id) { return identity_info(id).name; }

IdentityId parse_identity_id(std::string_view name) {
  for (const auto& info : kIdentities) {
    if (info.name == name) return info.id;
  }
  throw UsageError("unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& info : kIdentities) out.push_back(info.id);
    return out;
  }();
  return ids;
}

std::string describe(const Params& params, ParamShape shape) {
  switch (shape) {
    case ParamShape::k_m:
      return "k=" + std::to_string(params.first) + ",m=" + std::to_string(params.second);
    case ParamShape::k:
      return "k=" + std::to_string(params.first);
    case ParamShape::n:
      return "n=" + std::to_string(params.first);
  }
  return {};
}

EulerForm eq6_form(long k, long m, std::optional<long> upper) {
  const long top = upper.value_or(std::max(k, m));
  EulerForm form;
  for (long j = 0; j <= top; ++j) {
    RatFuncQ c = RatFuncQ::q() * binom(k, j) + sign(j) * binom(m, j);
    if (!c.is_zero()) form.push_back({std::move(c), k + m - j});
  }
  return form;
}

EulerForm eq103_form(long k) {
  EulerForm form;
  const RatFuncQ q_minus_1 = RatFuncQ::q() - RatFuncQ(1);
  for (long j = 0; j <= k / 2; ++j) {
    if (binomial(k, 2 * j) != 0) form.push_back({two_q() * binom(k, 2 * j), 2 * k - 2 * j});
    if (binomial(k, 2 * j + 1) != 0) form.push_back({q_minus_1 * binom(k, 2 * j + 1), 2 * k - 2 * j - 1});
  }
  return form;
}

EulerForm thm3_form(long k, Variant variant) {
  EulerForm form;
  const RatFuncQ q_minus_1 = RatFuncQ::q() - RatFuncQ(1);
  const RatFuncQ ratio = q_minus_1 / two_q();
  auto push = [&form](RatFuncQ c, long index) {
    if (!c.is_zero()) form.push_back({std::move(c), index});
  };
  if (variant == Variant::printed) {
    for (long j = 0; j <= k / 2; ++j) push(two_q() * binom(k, 2 * j), 2 * k + 1 - 2 * j);
    for (long j = 1; j <= k / 2; ++j) push(binom(k, 2 * j - 1), 2 * k + 1 - 2 * j);
    for (long j = 0; j <= k / 2; ++j) {
      push(q_minus_1 * binom(k, 2 * j + 1), 2 * k - 2 * j);
      push(ratio * binom(k, 2 * j + 1), 2 * k - 2 * j + 1);
    }
    return form;
  }
  for (long j = 0; 2 * j <= k; ++j) push(two_q() * binom(k, 2 * j), 2 * k + 1 - 2 * j);
  for (long j = 1; 2 * j - 1 <= k; ++j) push(binom(k, 2 * j - 1), 2 * k + 1 - 2 * j);
  for (long j = 0; 2 * j + 1 <= k; ++j) {
    push(q_minus_1 * binom(k, 2 * j + 1), 2 * k - 2 * j);
    push(ratio * binom(k, 2 * j + 1), 2 * k - 2 * j - 1);
  }
  return form;
}

XPolyQ expand(const EulerForm& form) {
  XPolyQ acc;
  for (const auto& term : form) acc += term.coefficient * euler_poly(term.index);
  return acc;
}

XPolyQ power_product(long k, long m) {
  const XPolyQ x_minus_1 = XPolyQ::x() - XPolyQ(RatFuncQ(1));
  return pow(XPolyQ::x(), static_cast<unsigned long>(k)) * pow(x_minus_1, static_cast<unsigned long>(m));
}

XPolyQ thm3_rhs_poly(long k) {
  return power_product(k, k) * (two_q() * XPolyQ::x() - XPolyQ(RatFuncQ::q()));
}

Sides<XPolyQ> sides_eq6(long k, long m) {
  require_at_least(k, 0, "k");
  require_at_least(m, 0, "m");
  return {expand(eq6_form(k, m)), two_q() * power_product(k, m)};
}

Sides<RatFuncQ> sides_thm1(long k, long m) {
  require_at_least(k, 1, "k");
  require_at_least(m, 1, "m");
  RatFuncQ left;
  for (long j = 1; j <= std::max(k, m); ++j) {
    const RatFuncQ c = RatFuncQ::q() * binom(k, j) + sign(j) * binom(m, j);
    const long idx = k + m - j + 1;
    left += c * euler_number(idx) * reciprocal(idx);
  }
  const long top = k + m + 1;
  const RatFuncQ right = RatFuncQ::q() * sign(m + 1) / (RatFuncQ(top) * binom(k + m, k)) -
                         two_q() * euler_number(top) * reciprocal(top);
  return {left, right};
}

Sides<RatFuncQ> sides_thm1_cor(long k) {
  require_at_least(k, 1, "k");
  RatFuncQ left;
  for (long j = 1; j <= k + 1; ++j) {
    const RatFuncQ c = RatFuncQ::q() * binom(k, j) + sign(j) * binom(k + 1, j);
    left += c * euler_number(2 * k + 2 - j) * reciprocal(2 * k + 2 - j);
  }
  const RatFuncQ right = RatFuncQ::q() * sign(k) / (RatFuncQ(2 * k + 2) * binom(2 * k + 1, k)) -
                         two_q() * euler_number(2 * k + 2) * reciprocal(2 * k + 2);
  return {left, right};
}

Sides<XPolyQ> sides_eq103(long k) {
  require_at_least(k, 1, "k");
  return {expand(eq103_form(k)), two_q() * power_product(k, k)};
}

Sides<RatFuncQ> sides_thm2(long k) {
  require_at_least(k, 1, "k");
  const RatFuncQ q_minus_1 = RatFuncQ::q() - RatFuncQ(1);
  RatFuncQ even, odd;
  for (long j = 0; j <= k / 2; ++j) {
    even += binom(k, 2 * j) * euler_number(2 * k - 2 * j + 1) * reciprocal(2 * k - 2 * j + 1);
    if (binomial(k, 2 * j + 1) != 0) {
      odd += binom(k, 2 * j + 1) * euler_number(2 * k - 2 * j) * reciprocal(2 * k - 2 * j);
    }
  }
  const RatFuncQ left = two_q() * even + q_minus_1 * odd;
  const RatFuncQ right = RatFuncQ::q() * sign(k + 1) / (RatFuncQ(2 * k + 1) * binom(2 * k, k));
  return {left, right};
}

Sides<XPolyQ> sides_thm3(long k, Variant variant) {
  require_at_least(k, 1, "k");
  return {expand(thm3_form(k, variant)), thm3_rhs_poly(k)};
}

Sides<RatFuncQ> sides_thm4(long k, long m) {
  require_at_least(k, 1, "k");
  require_at_least(m, 1, "m");
  const ExactFermionic model;
  return {integrate_form(model, eq6_form(k, m)), two_q_alternating_moments(model, k, m)};
}

Sides<RatFuncQ> sides_thm5(long k, Variant variant) {
  require_at_least(k, 1, "k");
  const ExactFermionic model;
  return {thm5_left(model, k), integrate_form(model, thm3_form(k, variant))};
}

Sides<XPolyQ> sides_eq7(long n) {
  require_at_least(n, 1, "n");
  return {euler_poly(n).differentiate(), RatFuncQ(n) * euler_poly(n - 1)};
}

Sides<RatFuncQ> sides_eq8(long n) {
  require_at_least(n, 0, "n");
  return {euler_poly_integral01_termwise(n), euler_poly_integral01_closed(n)};
}

Sides<PadicApprox> sides_thm4(long k, long m, const PadicMoments& moments) {
  require_at_least(k, 1, "k");
  require_at_least(m, 1, "m");
  return {integrate_form(moments, eq6_form(k, m)), two_q_alternating_moments(moments, k, m)};
}

Sides<PadicApprox> sides_thm5(long k, Variant variant, const PadicMoments& moments) {
  require_at_least(k, 1, "k");
  return {thm5_left(moments, k), integrate_form(moments, thm3_form(k, variant))};
}

Sides<PadicApprox> sides_thm6(long k, long m, const PadicMoments& moments) {
  require_at_least(k, 1, "k");
  require_at_least(m, 1, "m");
  return {two_q_alternating_moments(moments, k, m), integrate_form(moments, eq6_form(k, m))};
}

Sides<PadicApprox> sides_cor7(long k, Variant variant, const PadicMoments& moments) {
  require_at_least(k, 1, "k");
  return {thm5_left(moments, k), integrate_form(moments, thm3_form(k, variant))};
}

Sides<RatFuncQ> thm1_via_integration(long k, long m) {
  require_at_least(k, 1, "k");
  require_at_least(m, 1, "m");
  const RatFuncQ scale = -q_bracket(2, QBase::q_inverse);
  RatFuncQ left_integral;
  for (const auto& term : eq6_form(k, m)) left_integral += term.coefficient * euler_poly_integral01(term.index);
  const RatFuncQ right_integral = (two_q() * power_product(k, m)).integrate_0_to_1();
  const RatFuncQ j0 = two_q() * euler_number(k + m + 1) * reciprocal(k + m + 1);
  return {left_integral / scale - j0, right_integral / scale - j0};
}

Sides<RatFuncQ> thm2_via_integration(long k) {
  require_at_least(k, 1, "k");
  const RatFuncQ scale = -q_bracket(2, QBase::q_inverse);
  RatFuncQ left_integral;
  for (const auto& term : eq103_form(k)) left_integral += term.coefficient * euler_poly_integral01(term.index);
  const RatFuncQ right_integral = (two_q() * power_product(k, k)).integrate_0_to_1();
  return {left_integral / scale, right_integral / scale};
}

RatFuncQ thm4_oracle(long k, long m) { return integrate_poly(ExactFermionic{}, two_q() * power_product(k, m)); }

RatFuncQ thm5_oracle(long k) { return integrate_poly(ExactFermionic{}, thm3_rhs_poly(k)); }

PadicApprox numeric_oracle_km(long k, long m, const PadicMoments& moments) {
  return moments.embed(two_q()) * moments.integral(power_product(k, m));
}

PadicApprox numeric_oracle_thm5(long k, const PadicMoments& moments) {
  return moments.integral(thm3_rhs_poly(k));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::holds_to_precision:
      return "holds-to-precision";
    case Verdict::error:
      return "error";
  }
  return "error";
}

std::string to_string(const Certificate& c) {
  return std::visit([](const auto& v) { return v.to_string(); }, c);
}

std::string CheckMode::to_string() const {
  if (kind == CheckKind::exact) return "exact";
  return "padic(p=" + std::to_string(p) + ",q=" + q.get_str() + ",K=" + std::to_string(precision) + ")";
}

long max_euler_index(IdentityId id, const Params& params) {
  const long a = params.first;
  const long b = params.second;
  switch (id) {
    case IdentityId::EQ6:
    case IdentityId::THM4:
    case IdentityId::THM6:
      return a + b;
    case IdentityId::THM1:
      return a + b + 1;
    case IdentityId::THM1_COR:
      return 2 * a + 2;
    case IdentityId::EQ103:
      return 2 * a;
    case IdentityId::THM2:
    case IdentityId::THM3_PRINTED:
    case IdentityId::THM3_CORRECTED:
    case IdentityId::THM5_PRINTED:
    case IdentityId::THM5_CORRECTED:
    case IdentityId::COR7_PRINTED:
    case IdentityId::COR7_CORRECTED:
      return 2 * a + 1;
    case IdentityId::EQ7:
      return a;
    case IdentityId::EQ8:
      return a + 1;
  }
  return a + b;
}

namespace {

struct MomentSources {
  const PadicMoments* fermionic = nullptr;
  const PadicMoments* bosonic = nullptr;
};

Verdict classify_exact(const Certificate& cert) {
  const bool zero = std::visit([](const auto& v) { return v.is_zero(); }, cert);
  return zero ? Verdict::holds : Verdict::fails;
}

// holds_to_precision, fails, or error when the digits needed are missing.
Verdict classify_padic(const PadicApprox& cert, long digits) {
  if (known_divisible(cert, digits)) return Verdict::holds_to_precision;
  if (!cert.is_zero()) return Verdict::fails;
  return Verdict::error;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
  if (a == Verdict::error || b == Verdict::error) return Verdict::error;
  return a;
}

template <class T>
void set_exact(VerificationResult& r, const Sides<T>& sides) {
  r.certificate = Certificate(sides.first - sides.second);
  r.verdict = classify_exact(*r.certificate);
}

void check_exact(VerificationResult& r) {
  const long a = r.params.first;
  const long b = r.params.second;
  switch (r.id) {
    case IdentityId::EQ6:
      return set_exact(r, sides_eq6(a, b));
    case IdentityId::THM1:
      return set_exact(r, sides_thm1(a, b));
    case IdentityId::THM1_COR:
      return set_exact(r, sides_thm1_cor(a));
    case IdentityId::EQ103:
      return set_exact(r, sides_eq103(a));
    case IdentityId::THM2:
      return set_exact(r, sides_thm2(a));
    case IdentityId::THM3_PRINTED:
      return set_exact(r, sides_thm3(a, Variant::printed));
    case IdentityId::THM3_CORRECTED:
      return set_exact(r, sides_thm3(a, Variant::corrected));
    case IdentityId::THM4: {
      const auto sides = sides_thm4(a, b);
      set_exact(r, sides);
      r.oracle_certificate = Certificate(sides.second - thm4_oracle(a, b));
      r.verdict = combine(r.verdict, classify_exact(*r.oracle_certificate));
      return;
    }
    case IdentityId::THM5_PRINTED:
    case IdentityId::THM5_CORRECTED: {
      const auto variant = r.id == IdentityId::THM5_PRINTED ? Variant::printed : Variant::corrected;
      const auto sides = sides_thm5(a, variant);
      set_exact(r, sides);
      r.oracle_certificate = Certificate(sides.first - thm5_oracle(a));
      r.verdict = combine(r.verdict, classify_exact(*r.oracle_certificate));
      return;
    }
    case IdentityId::EQ7:
      return set_exact(r, sides_eq7(a));
    case IdentityId::EQ8:
      return set_exact(r, sides_eq8(a));
    case IdentityId::THM6:
    case IdentityId::COR7_PRINTED:
    case IdentityId::COR7_CORRECTED:
      break;
  }
  throw DomainError(std::string(to_string(r.id)) + " has no exact check");
}

void check_padic(VerificationResult& r, const MomentSources& sources) {
  const long a = r.params.first;
  const long b = r.params.second;
  Sides<PadicApprox> sides;
  PadicApprox integral_side;
  PadicApprox oracle;
  switch (r.id) {
    case IdentityId::THM4:
      sides = sides_thm4(a, b, *sources.fermionic);
      integral_side = sides.second;
      oracle = numeric_oracle_km(a, b, *sources.fermionic);
      break;
    case IdentityId::THM5_PRINTED:
    case IdentityId::THM5_CORRECTED:
      sides = sides_thm5(a, r.id == IdentityId::THM5_PRINTED ? Variant::printed : Variant::corrected,
                         *sources.fermionic);
      integral_side = sides.first;
      oracle = numeric_oracle_thm5(a, *sources.fermionic);
      break;
    case IdentityId::THM6:
      sides = sides_thm6(a, b, *sources.bosonic);
      integral_side = sides.first;
      oracle = numeric_oracle_km(a, b, *sources.bosonic);
      break;
    case IdentityId::COR7_PRINTED:
    case IdentityId::COR7_CORRECTED:
      sides = sides_cor7(a, r.id == IdentityId::COR7_PRINTED ? Variant::printed : Variant::corrected,
                         *sources.bosonic);
      integral_side = sides.first;
      oracle = numeric_oracle_thm5(a, *sources.bosonic);
      break;
    default:
      throw DomainError(std::string(to_string(r.id)) + " has no p-adic check");
  }
  const PadicApprox cert = sides.first - sides.second;
  const PadicApprox oracle_cert = integral_side - oracle;
  r.certificate = Certificate(cert);
  r.oracle_certificate = Certificate(oracle_cert);
  r.verdict = combine(classify_padic(cert, r.mode.precision), classify_padic(oracle_cert, r.mode.precision));
  if (r.verdict == Verdict::error) r.message = "certificate known to fewer than K digits";
}

VerificationResult run_check(IdentityId id, const Params& params, CheckKind kind, const VerifyOptions& options,
                             const MomentSources& sources) {
  const auto start = std::chrono::steady_clock::now();
  VerificationResult r;
  r.id = id;
  r.params = params;
  r.mode.kind = kind;
  if (kind == CheckKind::padic) {
    r.mode.p = options.padic.p;
    r.mode.q = options.padic.q;
    r.mode.precision = options.padic.precision;
  }
  try {
    const IdentityInfo& info = identity_info(id);
    require_at_least(params.first, info.min_first, info.shape == ParamShape::n ? "n" : "k");
    if (info.shape == ParamShape::k_m) require_at_least(params.second, info.min_second, "m");
    if (kind == CheckKind::exact) {
      check_exact(r);
    } else {
      if (!info.padic) throw DomainError(std::string(info.name) + " has no p-adic check");
      check_padic(r, sources);
    }
  } catch (const Error& e) {
    r.verdict = Verdict::error;
    r.message = e.what();
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

VerificationResult verify(IdentityId id, const Params& params, CheckKind kind, const VerifyOptions& options) {
  if (kind == CheckKind::exact) return run_check(id, params, kind, options, {});
  const PadicMoments fermionic(MeasureKind::fermionic, options.padic, options.cache);
  const PadicMoments bosonic(MeasureKind::bosonic, options.padic, options.cache);
  return run_check(id, params, kind, options, {&fermionic, &bosonic});
}

ParamRanges default_ranges(IdentityId id) {
  switch (id) {
    case IdentityId::EQ6:
      return {Range{0, 8}, Range{0, 8}, std::nullopt};
    case IdentityId::THM1:
      return {Range{1, 8}, Range{1, 8}, std::nullopt};
    case IdentityId::THM1_COR:
    case IdentityId::EQ103:
      return {Range{1, 8}, std::nullopt, std::nullopt};
    case IdentityId::THM2:
      return {Range{1, 10}, std::nullopt, std::nullopt};
    case IdentityId::THM3_PRINTED:
    case IdentityId::THM3_CORRECTED:
    case IdentityId::THM5_PRINTED:
    case IdentityId::THM5_CORRECTED:
      return {Range{1, 6}, std::nullopt, std::nullopt};
    case IdentityId::THM4:
      return {Range{1, 6}, Range{1, 6}, std::nullopt};
    case IdentityId::THM6:
      return {Range{1, 3}, Range{1, 3}, std::nullopt};
    case IdentityId::COR7_PRINTED:
    case IdentityId::COR7_CORRECTED:
      return {Range{1, 3}, std::nullopt, std::nullopt};
    case IdentityId::EQ7:
      return {std::nullopt, std::nullopt, Range{1, 12}};
    case IdentityId::EQ8:
      return {std::nullopt, std::nullopt, Range{0, 12}};
  }
  return {};
}

std::vector<Params> grid_cells(IdentityId id, const ParamRanges& ranges) {
  const IdentityInfo& info = identity_info(id);
  const ParamRanges defaults = default_ranges(id);
  std::vector<Params> cells;
  if (info.shape == ParamShape::n) {
    const Range n = ranges.n.value_or(*defaults.n);
    for (long i = std::max(n.lo, info.min_first); i <= n.hi; ++i) cells.push_back({i, 0});
    return cells;
  }
  const Range k = ranges.k.value_or(*defaults.k);
  if (info.shape == ParamShape::k) {
    for (long i = std::max(k.lo, info.min_first); i <= k.hi; ++i) cells.push_back({i, 0});
    return cells;
  }
  const Range m = ranges.m.value_or(*defaults.m);
  for (long i = std::max(k.lo, info.min_first); i <= k.hi; ++i) {
    for (long j = std::max(m.lo, info.min_second); j <= m.hi; ++j) cells.push_back({i, j});
  }
  return cells;
}

std::vector<VerificationResult> verify_grid(IdentityId id, const ParamRanges& ranges, const VerifyOptions& options) {
  const IdentityInfo& info = identity_info(id);
  struct Task {
    Params params;
    CheckKind kind;
  };
  std::vector<Task> tasks;
  long max_index = 0;
  for (const Params& cell : grid_cells(id, ranges)) {
    max_index = std::max(max_index, max_euler_index(id, cell));
    if (info.exact) tasks.push_back({cell, CheckKind::exact});
    if (info.padic && (!info.exact || options.padic_witness)) tasks.push_back({cell, CheckKind::padic});
  }
  // Fill the shared table up front so workers only read it.
  euler_poly(max_index);

  std::optional<PadicMoments> fermionic;
  std::optional<PadicMoments> bosonic;
  MomentSources sources;
  const bool any_padic = std::any_of(tasks.begin(), tasks.end(), [](const Task& t) { return t.kind == CheckKind::padic; });
  if (any_padic) {
    try {
      fermionic.emplace(MeasureKind::fermionic, options.padic, options.cache);
      bosonic.emplace(MeasureKind::bosonic, options.padic, options.cache);
      sources = {&*fermionic, &*bosonic};
    } catch (const Error& e) {
      std::vector<VerificationResult> failed;
      for (const Task& t : tasks) {
        VerificationResult r = run_check(id, t.params, CheckKind::exact, options, {});
        if (t.kind == CheckKind::padic) {
          r = VerificationResult{};
          r.id = id;
          r.params = t.params;
          r.mode = {CheckKind::padic, options.padic.p, options.padic.q, options.padic.precision};
          r.verdict = Verdict::error;
          r.message = e.what();
        }
        failed.push_back(std::move(r));
      }
      return failed;
    }
  }

  std::vector<VerificationResult> results(tasks.size());
  const auto n_tasks = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t i = 0; i < n_tasks; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = run_check(id, t.params, t.kind, options, sources);
  }
  return results;
}

}  // namespace qeuler
