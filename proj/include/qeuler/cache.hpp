#pragma once

#include "qeuler/qintegral.hpp"
#include "qeuler/ratfunc.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace qeuler {

// JSON file holding a prefix of the E_n table and computed moments.
//
// Mode::use serves hits and records new values. Mode::check never serves a
// hit; every freshly computed value is compared with the stored one and any
// difference is recorded as a mismatch. The file is only rewritten in use
// mode.
class ResultCache : public MomentCache {
 public:
  enum class Mode { use, check };

  // A missing file is an empty cache; a malformed one throws UsageError.
  ResultCache(std::filesystem::path path, Mode mode);

  Mode mode() const noexcept { return mode_; }

  std::optional<PadicApprox> find(MeasureKind kind, long n, const PadicContext& ctx) override;
  void store(MeasureKind kind, long n, const PadicContext& ctx, const PadicApprox& value) override;

  // Seeds the shared E_n table (use mode only).
  void seed_euler_table() const;
  // Records E_0..E_upto from the shared table. In check mode, compares them
  // with the stored prefix instead.
  void record_euler(long upto);

  std::vector<std::string> mismatches() const;
  std::size_t moment_count() const;
  std::size_t euler_count() const;

  // Writes the file if anything new was recorded in use mode.
  void save() const;

  std::string to_json() const;

 private:
  using Key = std::tuple<std::string, long, unsigned long, std::string, long, long, int, std::uint64_t>;
  static Key make_key(MeasureKind kind, long n, const PadicContext& ctx);

  std::filesystem::path path_;
  Mode mode_;
  mutable std::mutex mutex_;
  std::vector<RatFuncQ> euler_;
  std::map<Key, PadicApprox> moments_;
  std::vector<std::string> mismatches_;
  bool dirty_ = false;
};

}  // namespace qeuler
