#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler {

inline constexpr std::string_view kReportSchema = "qeuler-report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat { json, csv, pretty };

OutputFormat parse_output_format(std::string_view text);

// A table of string cells plus metadata. Every row has a status cell (the
// column named "status"); the summary counts rows per status.
//
// Everything except `elapsed` is canonical: identical inputs give identical
// bytes. Timing is written under a separate "timing" key that
// canonical_json() leaves out.
struct Report {
  std::string schema{kReportSchema};
  std::string tool_version{kToolVersion};
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Status names that always appear in the summary, even with count 0.
  std::vector<std::string> statuses;
  std::chrono::nanoseconds elapsed{0};

  std::size_t status_column() const;
  std::map<std::string, std::size_t> summary() const;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_json(const Report& report, bool include_timing = true);
std::string canonical_json(const Report& report);
// Throws UsageError on malformed input.
Report parse_report_json(std::string_view text);

std::string to_csv(const Report& report);
std::string to_pretty(const Report& report);

std::string render(const Report& report, OutputFormat format);

}  // namespace qeuler
