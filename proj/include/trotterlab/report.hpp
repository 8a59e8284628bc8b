#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace trotterlab {

inline constexpr const char* kReportVersion = "0.1.0";

enum class ReportFormat { csv, json };

ReportFormat parse_format(const std::string& name);

// Everything a run emits. Cells are pre-formatted strings (doubles through
// format_double), so serializing the same report twice gives identical
// bytes; nothing time- or machine-dependent belongs in here.
struct RunReport {
  std::string experiment;
  std::string config_echo;  // canonical JSON of the resolved config
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool pass = true;
};

// "%.17g": enough digits to round-trip any double.
std::string format_double(double v);
std::string format_long(long v);
std::string format_bool(bool v);

// CSV layout: "# <config json>" comment, sorted "# key=value" summary
// comments, "# pass=..." line, header, then RFC 4180 rows.
void write_csv(const RunReport& report, std::ostream& os);

// Single JSON object with sorted keys; rows stay strings so the two formats
// carry identical cell bytes.
void write_json(const RunReport& report, std::ostream& os);

std::string report_to_string(const RunReport& report, ReportFormat fmt);

void write_report_file(const RunReport& report, const std::string& path,
                       ReportFormat fmt);

}  // namespace trotterlab
