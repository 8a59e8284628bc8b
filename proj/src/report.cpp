#include "trotterlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "trotterlab/errors.hpp"

namespace trotterlab {

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw UsageError("unknown output format '" + name + "' (want csv or json)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_long(long v) { return std::to_string(v); }

std::string format_bool(bool v) { return v ? "true" : "false"; }

namespace {

bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_cell(const std::string& cell) {
  if (!needs_quoting(cell)) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::pair<std::string, std::string>> sorted_summary(
    const RunReport& report) {
  auto s = report.summary;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

void write_csv(const RunReport& report, std::ostream& os) {
  os << "# " << report.config_echo << "\n";
  for (const auto& [key, value] : sorted_summary(report))
    os << "# " << key << "=" << value << "\n";
  os << "# pass=" << format_bool(report.pass) << "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) os << ",";
    os << csv_cell(report.columns[i]);
  }
  os << "\n";
  for (const auto& row : report.rows) {
    if (row.size() != report.columns.size())
      throw InvalidInputError("report row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_cell(row[i]);
    }
    os << "\n";
  }
}

void write_json(const RunReport& report, std::ostream& os) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["version"] = kReportVersion;
  j["pass"] = report.pass;
  j["config"] = nlohmann::json::parse(report.config_echo);
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : sorted_summary(report)) summary[key] = value;
  j["summary"] = summary;
  j["columns"] = report.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    if (row.size() != report.columns.size())
      throw InvalidInputError("report row width does not match the header");
    rows.push_back(row);
  }
  j["rows"] = rows;
  os << j.dump(2) << "\n";
}

std::string report_to_string(const RunReport& report, ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::csv)
    write_csv(report, os);
  else
    write_json(report, os);
  return os.str();
}

void write_report_file(const RunReport& report, const std::string& path,
                       ReportFormat fmt) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open output file '" + path + "'");
  os << report_to_string(report, fmt);
}

}  // namespace trotterlab
