#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"

namespace ebubble::cli {

/// 17 significant digits, `.` decimal separator, independent of locale.
std::string format_number(double value);

struct ReportRow {
  std::string name;
  double value;
  std::string unit;
};

/// A flat list of named results plus free-text footnotes.
struct Report {
  std::string command;
  RawConfig effective;
  std::vector<ReportRow> rows;
  std::vector<std::string> footnotes;
};

/// `# ebubble <command>: key=value ...` echo of the effective configuration.
std::string config_echo_line(std::string_view command, const RawConfig& effective);

std::string render(const Report& report, OutputFormat format);

}  // namespace ebubble::cli
