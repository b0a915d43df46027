#include "qeuler/cache.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/qspecial.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qeuler {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kCacheSchema = "qeuler-cache/1";

ordered_json poly_json(const PolyQ& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

PolyQ poly_from_json(const ordered_json& j) {
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
  return PolyQ(std::move(c));
}

ordered_json padic_json(const PadicApprox& a) {
  if (a.is_zero()) return {{"zero", true}, {"absolute", a.absolute_precision()}};
  return {{"zero", false},
          {"valuation", a.valuation()},
          {"unit", a.unit().get_str()},
          {"precision", a.relative_precision()}};
}

PadicApprox padic_from_json(unsigned long p, const ordered_json& j) {
  if (j.at("zero").get<bool>()) return PadicApprox::zero(p, j.at("absolute").get<long>());
  return PadicApprox::from_unit(p, j.at("valuation").get<long>(), BigInt(j.at("unit").get<std::string>()),
                                j.at("precision").get<long>());
}

std::string describe_key(MeasureKind kind, long n, const PadicContext& ctx) {
  return to_string(kind) + " moment " + std::to_string(n) + " at p=" + std::to_string(ctx.p) +
         ", q=" + ctx.q.get_str() + ", K=" + std::to_string(ctx.precision);
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path path, Mode mode) : path_(std::move(path)), mode_(mode) {
  std::ifstream in(path_);
  if (!in) return;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const ordered_json j = ordered_json::parse(buffer.str());
    if (j.at("schema").get<std::string>() != kCacheSchema) throw UsageError("unsupported cache schema");
    for (const auto& e : j.at("euler")) euler_.emplace_back(poly_from_json(e.at("num")), poly_from_json(e.at("den")));
    for (const auto& e : j.at("moments")) {
      const auto p = e.at("p").get<unsigned long>();
      Key key{e.at("kind").get<std::string>(), e.at("n").get<long>(),       p,
              e.at("q").get<std::string>(),    e.at("K").get<long>(),       e.at("guard").get<long>(),
              e.at("n_max").get<int>(),        e.at("cost_cap").get<std::uint64_t>()};
      moments_.emplace(std::move(key), padic_from_json(p, e.at("value")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed cache file " + path_.string() + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError("malformed cache file " + path_.string() + ": " + e.what());
  }
}

ResultCache::Key ResultCache::make_key(MeasureKind kind, long n, const PadicContext& ctx) {
  return {to_string(kind), n, ctx.p, ctx.q.get_str(), ctx.precision, ctx.guard, ctx.max_level, ctx.cost_cap};
}

std::optional<PadicApprox> ResultCache::find(MeasureKind kind, long n, const PadicContext& ctx) {
  if (mode_ == Mode::check) return std::nullopt;
  std::lock_guard lock(mutex_);
  const auto it = moments_.find(make_key(kind, n, ctx));
  if (it == moments_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(MeasureKind kind, long n, const PadicContext& ctx, const PadicApprox& value) {
  std::lock_guard lock(mutex_);
  const Key key = make_key(kind, n, ctx);
  const auto it = moments_.find(key);
  if (mode_ == Mode::check) {
    if (it != moments_.end() && !(it->second == value)) {
      mismatches_.push_back(describe_key(kind, n, ctx) + ": cached " + it->second.to_string() + ", recomputed " +
                            value.to_string());
    }
    return;
  }
  if (it == moments_.end()) {
    moments_.emplace(key, value);
    dirty_ = true;
  }
}

void ResultCache::seed_euler_table() const {
  if (mode_ == Mode::check) return;
  std::lock_guard lock(mutex_);
  EulerTable::shared().seed(euler_);
}

void ResultCache::record_euler(long upto) {
  std::vector<RatFuncQ> fresh;
  for (long n = 0; n <= upto; ++n) fresh.push_back(euler_number(n));
  std::lock_guard lock(mutex_);
  if (mode_ == Mode::check) {
    for (std::size_t n = 0; n < fresh.size() && n < euler_.size(); ++n) {
      if (!(fresh[n] == euler_[n])) {
        mismatches_.push_back("E_" + std::to_string(n) + ": cached " + euler_[n].to_string() + ", recomputed " +
                              fresh[n].to_string());
      }
    }
    return;
  }
  if (fresh.size() > euler_.size()) {
    euler_ = std::move(fresh);
    dirty_ = true;
  }
}

std::vector<std::string> ResultCache::mismatches() const {
  std::lock_guard lock(mutex_);
  return mismatches_;
}

std::size_t ResultCache::moment_count() const {
  std::lock_guard lock(mutex_);
  return moments_.size();
}

std::size_t ResultCache::euler_count() const {
  std::lock_guard lock(mutex_);
  return euler_.size();
}

std::string ResultCache::to_json() const {
  std::lock_guard lock(mutex_);
  ordered_json j;
  j["schema"] = kCacheSchema;
  ordered_json euler = ordered_json::array();
  for (const auto& e : euler_) euler.push_back({{"num", poly_json(e.num())}, {"den", poly_json(e.den())}});
  j["euler"] = euler;
  ordered_json moments = ordered_json::array();
  for (const auto& [key, value] : moments_) {
    const auto& [kind, n, p, q, K, guard, n_max, cap] = key;
    moments.push_back({{"kind", kind},
                       {"n", n},
                       {"p", p},
                       {"q", q},
                       {"K", K},
                       {"guard", guard},
                       {"n_max", n_max},
                       {"cost_cap", cap},
                       {"value", padic_json(value)}});
  }
  j["moments"] = moments;
  return j.dump(1) + "\n";
}

void ResultCache::save() const {
  {
    std::lock_guard lock(mutex_);
    if (mode_ == Mode::check || !dirty_) return;
  }
  const std::string text = to_json();
  std::ofstream out(path_);
  if (!out) throw UsageError("cannot write cache file " + path_.string());
  out << text;
}

}  // namespace qeuler
