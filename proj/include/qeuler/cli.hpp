#pragma once

#include "qeuler/identities.hpp"
#include "qeuler/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qeuler::cli {

// "a..b" or a single integer "a". Throws UsageError on malformed or empty
// ranges.
Range parse_range(std::string_view text);

// q on the command line: "symbolic", "1+p", an integer, or "a/b".
struct QChoice {
  enum class Kind { symbolic, one_plus_p, value };
  Kind kind = Kind::symbolic;
  Rational value = 0;
};
QChoice parse_q(std::string_view text);

struct RunConfig {
  std::string command;
  std::string target;  // numbers: euler|bernoulli, verify: id|all, integrate: bosonic|fermionic
  std::optional<Range> k, m, n;
  std::optional<unsigned long> p;
  QChoice q;
  std::string q_text = "symbolic";
  long precision = 6;
  long guard = 4;
  int n_max = 12;
  std::uint64_t cost_cap = 1'000'000;
  Rational x0 = 0;
  std::optional<Rational> at_q;
  OutputFormat format = OutputFormat::pretty;
  std::optional<std::string> out;
  std::optional<std::string> cache;
  bool no_cache = false;
  bool parallel = true;
};

// p-adic settings implied by the config: p defaults to 3, symbolic q to 1 + p.
PadicContext padic_context(const RunConfig& cfg);

struct Outcome {
  Report report;
  int exit_code = 0;
};

Outcome cmd_numbers(const RunConfig& cfg, MomentCache* cache = nullptr);
Outcome cmd_poly(const RunConfig& cfg);
Outcome cmd_verify(const RunConfig& cfg, MomentCache* cache = nullptr);
Outcome cmd_integrate(const RunConfig& cfg);
// Every identity at its default ranges, p-adic witnesses included.
Outcome cmd_report(const RunConfig& cfg, MomentCache* cache = nullptr);

// Full command line: parses, runs, writes the report, returns the exit code
// (0 ok, 1 identity failure or computation error, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qeuler::cli
