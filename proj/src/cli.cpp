#include "qeuler/cli.hpp"

#include "qeuler/cache.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qspecial.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

namespace qeuler::cli {

namespace {

const std::vector<std::string> kTableStatuses{"ok", "warning", "error"};
const std::vector<std::string> kVerdictStatuses{"holds", "fails", "holds-to-precision", "error"};

long parse_long(std::string_view text, std::string_view what) {
  long value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string range_text(const std::optional<Range>& r) {
  if (!r) return "default";
  return std::to_string(r->lo) + ".." + std::to_string(r->hi);
}

std::vector<long> indices(const std::optional<Range>& r, std::string_view flag) {
  if (!r) throw UsageError("missing " + std::string(flag) + " range");
  std::vector<long> out;
  for (long i = r->lo; i <= r->hi; ++i) out.push_back(i);
  return out;
}

void require_nonnegative(const Range& r, std::string_view flag) {
  if (r.lo < 0) throw UsageError(std::string(flag) + " must be non-negative");
}

void echo_padic(Report& report, const PadicContext& ctx) {
  report.config.emplace_back("p", std::to_string(ctx.p));
  report.config.emplace_back("q", ctx.q.get_str());
  report.config.emplace_back("K", std::to_string(ctx.precision));
  report.config.emplace_back("guard", std::to_string(ctx.guard));
  report.config.emplace_back("n_max", std::to_string(ctx.max_level));
  report.config.emplace_back("cost_cap", std::to_string(ctx.cost_cap));
}

PadicContext validated(const PadicContext& ctx) {
  try {
    ctx.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return ctx;
}

std::string trace_text(const IntegralResult& r) {
  std::string out;
  for (const auto& t : r.trace) {
    if (!out.empty()) out += ' ';
    out += "N=" + std::to_string(t.level) + ":";
    if (!t.distance_to_previous) {
      out += "-";
    } else if (t.distance_to_previous->indistinguishable()) {
      out += ">=" + std::to_string(t.distance_to_previous->cap);
    } else {
      out += std::to_string(*t.distance_to_previous->valuation);
    }
  }
  return out;
}

std::string constant_note(const Integrand& f) {
  return f.coefficients().size() <= 1 ? "constant integrand: exact at every level" : "";
}

std::string join_notes(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "; " + b;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_long(text, "range");
  } else {
    r.lo = parse_long(text.substr(0, dots), "range start");
    r.hi = parse_long(text.substr(dots + 2), "range end");
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

QChoice parse_q(std::string_view text) {
  if (text == "symbolic") return {};
  if (text == "1+p") return {QChoice::Kind::one_plus_p, 0};
  try {
    return {QChoice::Kind::value, parse_rational(text)};
  } catch (const Error&) {
    throw UsageError("invalid q '" + std::string(text) + "' (expected symbolic, 1+p, an integer or a/b)");
  }
}

PadicContext padic_context(const RunConfig& cfg) {
  PadicContext ctx;
  ctx.p = cfg.p.value_or(3);
  ctx.q = cfg.q.kind == QChoice::Kind::value ? cfg.q.value : Rational(1 + static_cast<long>(ctx.p));
  ctx.precision = cfg.precision;
  ctx.guard = cfg.guard;
  ctx.max_level = cfg.n_max;
  ctx.cost_cap = cfg.cost_cap;
  ctx.parallel = cfg.parallel;
  return ctx;
}

Outcome cmd_numbers(const RunConfig& cfg, MomentCache* cache) {
  Outcome o;
  Report& r = o.report;
  r.command = "numbers";
  r.statuses = kTableStatuses;
  r.config.emplace_back("kind", cfg.target);
  r.config.emplace_back("n", range_text(cfg.n));
  if (cfg.n) require_nonnegative(*cfg.n, "--n");

  if (cfg.target == "euler") {
    if (cfg.at_q) r.config.emplace_back("at_q", cfg.at_q->get_str());
    r.columns = {"n", "value", "status", "note"};
    for (long n : indices(cfg.n, "--n")) {
      try {
        const RatFuncQ& e = euler_number(n);
        r.rows.push_back({std::to_string(n), cfg.at_q ? e.eval(*cfg.at_q).get_str() : e.to_string(), "ok", ""});
      } catch (const Error& e) {
        r.rows.push_back({std::to_string(n), "", "error", e.what()});
        o.exit_code = 1;
      }
    }
    return o;
  }
  if (cfg.target != "bernoulli") throw UsageError("numbers: kind must be euler or bernoulli");
  if (!cfg.p) throw UsageError("numbers bernoulli needs a p-adic configuration (--p)");
  const PadicContext ctx = validated(padic_context(cfg));
  echo_padic(r, ctx);
  r.columns = {"n", "valuation", "unit", "precision", "value", "levels", "status", "note"};
  for (long n : indices(cfg.n, "--n")) {
    try {
      const IntegralRequest req{MeasureKind::bosonic, Integrand::shifted_monomial(n, 0), ctx, std::nullopt};
      const IntegralResult res = integrate(req);
      if (res.converged && cache != nullptr) cache->store(MeasureKind::bosonic, n, ctx, res.value);
      const PadicApprox& v = res.value;
      const std::string val = v.is_zero() ? "-" : std::to_string(v.valuation());
      const std::string unit = v.is_zero() ? "0" : v.unit().get_str();
      const std::string rel = v.is_zero() ? "0" : std::to_string(v.relative_precision());
      r.rows.push_back({std::to_string(n), val, unit, rel, v.to_string(), std::to_string(res.levels_used),
                        res.converged ? "ok" : "warning", join_notes(constant_note(req.integrand), res.note)});
    } catch (const Error& e) {
      r.rows.push_back({std::to_string(n), "", "", "", "", "", "error", e.what()});
      o.exit_code = 1;
    }
  }
  return o;
}

Outcome cmd_poly(const RunConfig& cfg) {
  Outcome o;
  Report& r = o.report;
  r.command = "poly";
  r.statuses = kTableStatuses;
  r.config.emplace_back("n", range_text(cfg.n));
  if (cfg.at_q) r.config.emplace_back("at_q", cfg.at_q->get_str());
  if (cfg.n) require_nonnegative(*cfg.n, "--n");
  r.columns = {"n", "polynomial", "status", "note"};
  for (long n : indices(cfg.n, "--n")) {
    try {
      const XPolyQ& f = euler_poly(n);
      std::string text;
      if (cfg.at_q) {
        std::vector<Rational> c;
        for (const auto& coeff : f.coefficients()) c.push_back(coeff.eval(*cfg.at_q));
        text = PolyQ(std::move(c)).to_string("x");
      } else {
        text = f.to_string();
      }
      r.rows.push_back({std::to_string(n), text, "ok", ""});
    } catch (const Error& e) {
      r.rows.push_back({std::to_string(n), "", "error", e.what()});
      o.exit_code = 1;
    }
  }
  return o;
}

namespace {

void check_shape(const IdentityInfo& info, const RunConfig& cfg) {
  const std::string name(info.name);
  switch (info.shape) {
    case ParamShape::k_m:
      if (cfg.n) throw UsageError(name + " takes --k and --m, not --n");
      break;
    case ParamShape::k:
      if (cfg.m || cfg.n) throw UsageError(name + " takes --k only");
      break;
    case ParamShape::n:
      if (cfg.k || cfg.m) throw UsageError(name + " takes --n only");
      break;
  }
}

Outcome run_grid(const RunConfig& cfg, const std::vector<IdentityId>& ids, bool witness, MomentCache* cache,
                 const std::string& command) {
  Outcome o;
  Report& r = o.report;
  r.command = command;
  r.statuses = kVerdictStatuses;
  r.config.emplace_back("identity", cfg.target);
  r.config.emplace_back("k", range_text(cfg.k));
  r.config.emplace_back("m", range_text(cfg.m));
  r.config.emplace_back("n", range_text(cfg.n));
  const bool needs_padic =
      witness || std::any_of(ids.begin(), ids.end(), [](IdentityId id) { return !identity_info(id).exact; });
  VerifyOptions options;
  options.padic = needs_padic ? validated(padic_context(cfg)) : padic_context(cfg);
  options.padic_witness = witness;
  options.cache = cache;
  options.parallel = cfg.parallel;
  if (needs_padic) echo_padic(r, options.padic);
  r.config.emplace_back("padic_witness", witness ? "yes" : "no");

  r.columns = {"identity", "params", "check", "printed", "status", "certificate", "oracle_certificate", "message"};
  const ParamRanges ranges{cfg.k, cfg.m, cfg.n};
  for (IdentityId id : ids) {
    const IdentityInfo& info = identity_info(id);
    for (const VerificationResult& res : verify_grid(id, ranges, options)) {
      r.rows.push_back({std::string(info.name), describe(res.params, info.shape), res.mode.to_string(),
                        info.printed ? "yes" : "no", std::string(to_string(res.verdict)),
                        res.certificate ? to_string(*res.certificate) : "",
                        res.oracle_certificate ? to_string(*res.oracle_certificate) : "", res.message});
      const bool ok = res.verdict == Verdict::holds || res.verdict == Verdict::holds_to_precision;
      if (!info.printed && !ok) o.exit_code = 1;
    }
  }
  return o;
}

}  // namespace

Outcome cmd_verify(const RunConfig& cfg, MomentCache* cache) {
  std::vector<IdentityId> ids;
  if (cfg.target == "all") {
    ids = all_identities();
  } else {
    const IdentityId id = parse_identity_id(cfg.target);
    check_shape(identity_info(id), cfg);
    ids.push_back(id);
  }
  return run_grid(cfg, ids, cfg.p.has_value(), cache, "verify");
}

Outcome cmd_report(const RunConfig& cfg, MomentCache* cache) {
  RunConfig defaults = cfg;
  defaults.target = "all";
  defaults.k.reset();
  defaults.m.reset();
  defaults.n.reset();
  return run_grid(defaults, all_identities(), true, cache, "report");
}

Outcome cmd_integrate(const RunConfig& cfg) {
  Outcome o;
  Report& r = o.report;
  r.command = "integrate";
  r.statuses = kTableStatuses;
  const MeasureKind kind = parse_measure_kind(cfg.target);
  if (!cfg.p) throw UsageError("integrate needs a p-adic configuration (--p)");
  const PadicContext ctx = validated(padic_context(cfg));
  r.config.emplace_back("kind", cfg.target);
  r.config.emplace_back("n", range_text(cfg.n));
  r.config.emplace_back("x0", cfg.x0.get_str());
  echo_padic(r, ctx);
  if (cfg.n) require_nonnegative(*cfg.n, "--n");
  r.columns = {"n", "x0", "value", "achieved_precision", "levels", "exact", "trace", "status", "note"};
  for (long n : indices(cfg.n, "--n")) {
    try {
      const IntegralRequest req{kind, Integrand::shifted_monomial(n, cfg.x0), ctx, std::nullopt};
      const IntegralResult res = integrate(req);
      std::string exact = "-";
      if (kind == MeasureKind::fermionic) {
        const Rational e = euler_poly(n).eval_at(cfg.x0).eval(ctx.q);
        exact = padic_from_rational(e, ctx.p, ctx.precision).truncated(ctx.precision).to_string();
      }
      r.rows.push_back({std::to_string(n), cfg.x0.get_str(), res.value.to_string(),
                        std::to_string(res.achieved_precision), std::to_string(res.levels_used), exact,
                        trace_text(res), res.converged ? "ok" : "warning",
                        join_notes(constant_note(req.integrand), res.note)});
    } catch (const Error& e) {
      r.rows.push_back({std::to_string(n), cfg.x0.get_str(), "", "", "", "", "", "error", e.what()});
      o.exit_code = 1;
    }
  }
  return o;
}

namespace {

void add_common_options(CLI::App* app, RunConfig& cfg, std::string& k, std::string& m, std::string& n,
                        std::string& format, std::string& x0, std::string& at_q) {
  app->add_option("--k", k, "k range, a..b");
  app->add_option("--m", m, "m range, a..b");
  app->add_option("--n", n, "n range, a..b");
  app->add_option("--p", cfg.p, "odd prime for p-adic checks");
  app->add_option("--q", cfg.q_text, "q for p-adic checks: 1+p, an integer or a/b");
  app->add_option("--K", cfg.precision, "p-adic digits requested");
  app->add_option("--guard", cfg.guard, "guard digits");
  app->add_option("--n-max", cfg.n_max, "largest Riemann-sum level");
  app->add_option("--cost-cap", cfg.cost_cap, "largest admissible p^N");
  app->add_option("--format", format, "json, csv or pretty");
  app->add_option("--out", cfg.out, "write the report here instead of stdout");
  app->add_option("--cache", cfg.cache, "JSON result cache");
  app->add_flag("--no-cache", cfg.no_cache, "recompute everything; with --cache, compare against it");
  app->add_flag("!--parallel,--serial", cfg.parallel, "evaluate on one thread");
  app->add_option("--x0", x0, "integrand shift for integrate");
  app->add_option("--at-q", at_q, "evaluate exact results at this q");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Euler numbers, p-adic q-integrals and identity checks", "qeuler"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig cfg;
  std::string k, m, n, format = "pretty", x0, at_q;

  auto* numbers = app.add_subcommand("numbers", "table of E_n (euler) or p-adic B_n (bernoulli)");
  numbers->add_option("kind", cfg.target, "euler or bernoulli")->required();
  auto* poly = app.add_subcommand("poly", "table of E_n(x)");
  auto* verify_cmd = app.add_subcommand("verify", "check an identity (or all) over a grid");
  verify_cmd->add_option("identity", cfg.target, "identity name or all")->required();
  auto* integrate_cmd = app.add_subcommand("integrate", "p-adic q-integral of (x0 + y)^n");
  integrate_cmd->add_option("kind", cfg.target, "bosonic or fermionic")->required();
  auto* report_cmd = app.add_subcommand("report", "every identity at its default ranges");
  for (auto* sub : {numbers, poly, verify_cmd, integrate_cmd, report_cmd}) {
    add_common_options(sub, cfg, k, m, n, format, x0, at_q);
  }

  std::ostringstream cli_out, cli_err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<ResultCache> cache;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!k.empty()) cfg.k = parse_range(k);
    if (!m.empty()) cfg.m = parse_range(m);
    if (!n.empty()) cfg.n = parse_range(n);
    cfg.q = parse_q(cfg.q_text);
    cfg.format = parse_output_format(format);
    if (!x0.empty()) cfg.x0 = parse_rational(x0);
    if (!at_q.empty()) cfg.at_q = parse_rational(at_q);
    if (cfg.q.kind == QChoice::Kind::one_plus_p && !cfg.p) throw UsageError("--q 1+p needs --p");
    if (cfg.cache) {
      cache = std::make_unique<ResultCache>(*cfg.cache,
                                            cfg.no_cache ? ResultCache::Mode::check : ResultCache::Mode::use);
      cache->seed_euler_table();
    }
    if (cfg.command == "numbers") {
      outcome = cmd_numbers(cfg, cache.get());
    } else if (cfg.command == "poly") {
      outcome = cmd_poly(cfg);
    } else if (cfg.command == "verify") {
      outcome = cmd_verify(cfg, cache.get());
    } else if (cfg.command == "integrate") {
      outcome = cmd_integrate(cfg);
    } else {
      outcome = cmd_report(cfg, cache.get());
    }
  } catch (const UsageError& e) {
    err << "qeuler: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "qeuler: " << e.what() << '\n';
    return 1;
  }
  outcome.report.elapsed =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);

  if (cache) {
    try {
      cache->record_euler(EulerTable::shared().computed_up_to());
      cache->save();
    } catch (const Error& e) {
      err << "qeuler: " << e.what() << '\n';
      return 2;
    }
    const auto mismatches = cache->mismatches();
    for (const auto& msg : mismatches) err << "qeuler: cache mismatch: " << msg << '\n';
    if (!mismatches.empty()) outcome.exit_code = 1;
  }

  const std::string text = render(outcome.report, cfg.format);
  if (cfg.out) {
    std::ofstream file(*cfg.out);
    if (!file) {
      err << "qeuler: cannot write " << *cfg.out << '\n';
      return 2;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.exit_code;
}

}  // namespace qeuler::cli
