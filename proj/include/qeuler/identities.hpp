#pragma once

#include "qeuler/qintegral.hpp"
#include "qeuler/ratfunc.hpp"
#include "qeuler/xpoly.hpp"

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qeuler {

// Every checkable identity. *_PRINTED encodes a statement exactly as typeset
// (summation bounds and subscripts included); *_CORRECTED is the form that
// follows from the earlier identities.
enum class IdentityId {
  EQ6,
  THM1,
  THM1_COR,
  EQ103,
  THM2,
  THM3_PRINTED,
  THM3_CORRECTED,
  THM4,
  THM5_PRINTED,
  THM5_CORRECTED,
  THM6,
  COR7_PRINTED,
  COR7_CORRECTED,
  EQ7,
  EQ8,
};

enum class ParamShape { k_m, k, n };

enum class CheckKind { exact, padic };

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  ParamShape shape;
  long min_first;   // smallest admissible k (or n)
  long min_second;  // smallest admissible m
  bool exact;       // can be checked in Q(q) / Q(q)[x]
  bool padic;       // can be checked p-adically
  bool printed;     // verdicts are informational
};

const IdentityInfo& identity_info(IdentityId id);
std::string_view to_string(IdentityId id);
// Throws UsageError for unknown names.
IdentityId parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identities();

enum class Variant { printed, corrected };

struct Params {
  long first = 0;   // k, or n for n-shaped identities
  long second = 0;  // m; unused unless the shape is k_m

  friend auto operator<=>(const Params&, const Params&) = default;
};

std::string describe(const Params& params, ParamShape shape);

// Sum of coefficient * E_{index,q}(x).
struct EulerTerm {
  RatFuncQ coefficient;
  long index;
};
using EulerForm = std::vector<EulerTerm>;

// sum_j [q C(k,j) + (-1)^j C(m,j)] E_{k+m-j,q}(x), j = 0..upper. The
// default upper bound is max(k, m); any bound >= max(k, m) gives the same
// sum because C(n, r) = 0 for r > n.
EulerForm eq6_form(long k, long m, std::optional<long> upper = std::nullopt);
// Even/odd regrouping of eq6_form(k, k).
EulerForm eq103_form(long k);
EulerForm thm3_form(long k, Variant variant);

XPolyQ expand(const EulerForm& form);

// x^k (x - 1)^m
XPolyQ power_product(long k, long m);
// x^k (x - 1)^k ([2]_q x - q)
XPolyQ thm3_rhs_poly(long k);

template <class T>
using Sides = std::pair<T, T>;

Sides<XPolyQ> sides_eq6(long k, long m);
Sides<RatFuncQ> sides_thm1(long k, long m);
Sides<RatFuncQ> sides_thm1_cor(long k);
Sides<XPolyQ> sides_eq103(long k);
Sides<RatFuncQ> sides_thm2(long k);
Sides<XPolyQ> sides_thm3(long k, Variant variant);
Sides<RatFuncQ> sides_thm4(long k, long m);
Sides<RatFuncQ> sides_thm5(long k, Variant variant);
Sides<XPolyQ> sides_eq7(long n);
Sides<RatFuncQ> sides_eq8(long n);

// The same statements evaluated p-adically. THM4/THM5 take fermionic moments
// (second witnesses for exact identities); THM6/COR7 take bosonic moments.
Sides<PadicApprox> sides_thm4(long k, long m, const PadicMoments& moments);
Sides<PadicApprox> sides_thm5(long k, Variant variant, const PadicMoments& moments);
Sides<PadicApprox> sides_thm6(long k, long m, const PadicMoments& moments);
Sides<PadicApprox> sides_cor7(long k, Variant variant, const PadicMoments& moments);

// THM1 sides rebuilt from EQ6: integrate both sides over [0, 1] with the
// checked integral of E_n(x), divide by -[2]_{1/q}, drop the j = 0 term.
Sides<RatFuncQ> thm1_via_integration(long k, long m);
// THM2 sides rebuilt the same way from EQ103.
Sides<RatFuncQ> thm2_via_integration(long k);

// Independent evaluations of the integral that one side of an identity
// claims to equal, by expanding the integrand into monomials.
//   [2]_q * int x^k (x-1)^m d mu_{-q}          (THM4, exact)
RatFuncQ thm4_oracle(long k, long m);
//   int x^k (x-1)^k ([2]_q x - q) d mu_{-q}    (THM5, exact)
RatFuncQ thm5_oracle(long k);
// Direct Riemann-sum integrals of the same polynomials for the measure of
// `moments` (THM4/THM6 use the first, THM5/COR7 the second).
PadicApprox numeric_oracle_km(long k, long m, const PadicMoments& moments);
PadicApprox numeric_oracle_thm5(long k, const PadicMoments& moments);

enum class Verdict { holds, fails, holds_to_precision, error };
std::string_view to_string(Verdict v);

using Certificate = std::variant<RatFuncQ, XPolyQ, PadicApprox>;
std::string to_string(const Certificate& c);

struct CheckMode {
  CheckKind kind = CheckKind::exact;
  unsigned long p = 0;
  Rational q = 0;
  long precision = 0;

  std::string to_string() const;
  friend bool operator==(const CheckMode&, const CheckMode&) = default;
};

struct VerificationResult {
  IdentityId id = IdentityId::EQ6;
  Params params;
  CheckMode mode;
  Verdict verdict = Verdict::error;
  // left - right
  std::optional<Certificate> certificate;
  // (side equal to an integral) - (that integral computed independently)
  std::optional<Certificate> oracle_certificate;
  std::string message;
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  PadicContext padic;
  // Also check THM4/THM5 p-adically at `padic`.
  bool padic_witness = false;
  MomentCache* cache = nullptr;
  bool parallel = true;
};

// Computes the sides of `id` at `params`, subtracts, and classifies. Errors
// raised while computing are reported as Verdict::error, never thrown.
VerificationResult verify(IdentityId id, const Params& params, CheckKind kind, const VerifyOptions& options);

struct Range {
  long lo = 0;
  long hi = 0;
};

struct ParamRanges {
  std::optional<Range> k;
  std::optional<Range> m;
  std::optional<Range> n;
};

// Default grid used by the full report.
ParamRanges default_ranges(IdentityId id);

// Parameter cells for `id`: missing ranges fall back to default_ranges and
// lower bounds are raised to the identity's minimum.
std::vector<Params> grid_cells(IdentityId id, const ParamRanges& ranges);

// Checks every cell (in parallel when enabled). Results are ordered by
// (params, check kind) whatever the evaluation order.
std::vector<VerificationResult> verify_grid(IdentityId id, const ParamRanges& ranges, const VerifyOptions& options);

// Largest E_n index touched by `id` at `params`.
long max_euler_index(IdentityId id, const Params& params);

}  // namespace qeuler
