#include "qeuler/report.hpp"

#include "qeuler/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qeuler {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "pretty") return OutputFormat::pretty;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json, csv or pretty)");
}

std::size_t Report::status_column() const {
  const auto it = std::find(columns.begin(), columns.end(), "status");
  if (it == columns.end()) throw InternalInconsistency("report has no status column");
  return static_cast<std::size_t>(it - columns.begin());
}

std::map<std::string, std::size_t> Report::summary() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& s : statuses) counts[s] = 0;
  if (rows.empty()) return counts;
  const std::size_t col = status_column();
  for (const auto& row : rows) ++counts[row.at(col)];
  return counts;
}

namespace {

ordered_json to_json_value(const Report& report, bool include_timing) {
  ordered_json j;
  j["schema"] = report.schema;
  j["tool_version"] = report.tool_version;
  j["command"] = report.command;
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : report.config) config[key] = value;
  j["config"] = config;
  j["columns"] = report.columns;
  j["rows"] = report.rows;
  j["statuses"] = report.statuses;
  ordered_json counts = ordered_json::object();
  for (const auto& [status, n] : report.summary()) counts[status] = n;
  j["summary"] = {{"items", report.rows.size()}, {"counts", counts}};
  if (include_timing) j["timing"] = {{"elapsed_ns", report.elapsed.count()}};
  return j;
}

}  // namespace

std::string to_json(const Report& report, bool include_timing) {
  return to_json_value(report, include_timing).dump(2) + "\n";
}

std::string canonical_json(const Report& report) { return to_json(report, false); }

Report parse_report_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw UsageError("unsupported report schema '" + r.schema + "'");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("config").items()) r.config.emplace_back(key, value.get<std::string>());
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    r.statuses = j.at("statuses").get<std::vector<std::string>>();
    if (j.contains("timing")) r.elapsed = std::chrono::nanoseconds(j["timing"].at("elapsed_ns").get<std::int64_t>());
    if (j.at("summary").at("items").get<std::size_t>() != r.rows.size()) {
      throw UsageError("report summary does not match its rows");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(cells[i]);
  }
  out << '\n';
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  csv_line(out, report.columns);
  for (const auto& row : report.rows) csv_line(out, row);
  return out.str();
}

std::string to_pretty(const Report& report) {
  std::vector<std::size_t> width(report.columns.size(), 0);
  for (std::size_t i = 0; i < report.columns.size(); ++i) width[i] = report.columns[i].size();
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << report.command << " (" << report.tool_version << ")\n";
  for (const auto& [key, value] : report.config) out << "  " << key << " = " << value << '\n';
  out << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(report.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : report.rows) line(row);
  out << '\n' << report.rows.size() << " items:";
  for (const auto& [status, n] : report.summary()) out << ' ' << status << '=' << n;
  out << '\n';
  return out.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return to_json(report);
    case OutputFormat::csv:
      return to_csv(report);
    case OutputFormat::pretty:
      return to_pretty(report);
  }
  return {};
}

}  // namespace qeuler
