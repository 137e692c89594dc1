#include "output.hpp"

#include <array>
#include <charconv>

#include <json.hpp>

namespace ebubble::cli {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

std::string config_echo_line(std::string_view command, const RawConfig& effective) {
  std::string line = "# ebubble " + std::string(command) + ":";
  for (const auto& [key, value] : effective) line += " " + key + "=" + value;
  return line;
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    doc["config"] = report.effective;
    auto& results = doc["results"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows)
      results.push_back({{"name", row.name}, {"value", row.value}, {"unit", row.unit}});
    doc["comparison"] = report.footnotes;
    return doc.dump(2) + "\n";
  }

  std::string out = config_echo_line(report.command, report.effective) + "\n";
  out += "quantity,value,unit\n";
  for (const auto& row : report.rows)
    out += row.name + "," + format_number(row.value) + "," + row.unit + "\n";
  for (const auto& note : report.footnotes) out += "# " + note + "\n";
  return out;
}

}  // namespace ebubble::cli
