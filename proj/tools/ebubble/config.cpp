#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>

#include "ebubble/error.hpp"

namespace ebubble::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string flag_name(std::string_view key) { return "--" + std::string(key); }

}  // namespace

const std::vector<std::string_view>& known_keys() {
  static const std::vector<std::string_view> keys{
      "binding-energy", "binding-energy-unit", "components",   "constants",
      "energy-unit",    "format",              "gamma",        "gamma-count",
      "gamma-max",      "gamma-min",           "gamma-unit",   "gammas",
      "length-unit",    "model",               "output",       "pressure-unit",
      "pressures",      "radius-count",        "radius-max",   "radius-min",
      "radius-spacing", "spacing",             "spacing-unit", "zero-point-c",
  };
  return keys;
}

std::string normalize_key(std::string_view key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) out.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(c)));
  return out;
}

ParsedFile parse_config_text(std::string_view text, std::string_view source_name) {
  ParsedFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      out.errors.push_back(where + ": expected 'key = value'");
      continue;
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      out.errors.push_back(where + ": unknown key '" + key + "'");
      continue;
    }
    out.values[key] = value;
  }
  return out;
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value))
    return std::nullopt;
  return value;
}

bool Validator::has(std::string_view key) const { return raw_.contains(std::string(key)); }

std::optional<std::string> Validator::text(std::string_view key) const {
  const auto it = raw_.find(std::string(key));
  if (it == raw_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> Validator::number(std::string_view key, bool required) {
  const auto raw = text(key);
  if (!raw) {
    if (required) fail("missing required " + flag_name(key));
    return std::nullopt;
  }
  const auto value = parse_double(*raw);
  if (!value) fail(flag_name(key) + ": '" + *raw + "' is not a finite number");
  return value;
}

std::optional<std::vector<double>> Validator::number_list(std::string_view key, bool required) {
  const auto raw = text(key);
  if (!raw) {
    if (required) fail("missing required " + flag_name(key));
    return std::nullopt;
  }
  std::vector<double> values;
  std::string_view rest = *raw;
  bool good = true;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    if (const auto v = parse_double(item)) {
      values.push_back(*v);
    } else {
      fail(flag_name(key) + ": '" + std::string(trim(item)) + "' is not a finite number");
      good = false;
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (!good) return std::nullopt;
  return values;
}

std::optional<std::size_t> Validator::count(std::string_view key) {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  std::size_t value = 0;
  const auto t = trim(*raw);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    fail(flag_name(key) + ": '" + *raw + "' is not a non-negative integer");
    return std::nullopt;
  }
  return value;
}

std::optional<units::Unit> Validator::unit(std::string_view key, units::Dimension dimension) {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  const auto u = units::parse_unit(*raw);
  if (!u) {
    fail(flag_name(key) + ": unknown unit '" + *raw + "'");
    return std::nullopt;
  }
  if (units::dimension_of(*u) != dimension) {
    fail(flag_name(key) + ": unit '" + *raw + "' is a " +
         std::string(units::to_string(units::dimension_of(*u))) + " unit, expected " +
         std::string(units::to_string(dimension)));
    return std::nullopt;
  }
  return u;
}

std::optional<model::ZeroPointModel> Validator::zero_point_model() {
  const std::string kind = text("model").value_or("c1");
  const bool has_c = has("zero-point-c");
  if (kind == "custom") {
    const auto c = number("zero-point-c", true);
    if (!c) return std::nullopt;
    try {
      return model::ZeroPointModel::custom(*c);
    } catch (const InvalidArgument& e) {
      fail(std::string("--zero-point-c: ") + e.what());
      return std::nullopt;
    }
  }
  if (has_c) {
    fail("--zero-point-c only applies to --model custom");
    return std::nullopt;
  }
  if (kind == "c1" || kind == "uncertainty_rounded")
    return model::ZeroPointModel::uncertainty_rounded();
  if (kind == "c27_32" || kind == "uncertainty_exact")
    return model::ZeroPointModel::uncertainty_exact();
  if (kind == "infinite_well" || kind == "well") return model::ZeroPointModel::infinite_well();
  fail("--model: unknown zero-point model '" + kind +
       "' (accepted: c1, uncertainty_rounded, c27_32, uncertainty_exact, infinite_well, custom)");
  return std::nullopt;
}

std::optional<units::ProfileName> Validator::profile() {
  const std::string tag = text("constants").value_or("precise");
  const auto name = units::parse_profile(tag);
  if (!name) fail("--constants: unknown profile '" + tag + "' (accepted: precise, paper_rounded)");
  return name;
}

std::optional<OutputFormat> Validator::format() {
  const std::string tag = text("format").value_or("csv");
  if (tag == "csv") return OutputFormat::csv;
  if (tag == "json") return OutputFormat::json;
  fail("--format: unknown format '" + tag + "' (accepted: csv, json)");
  return std::nullopt;
}

std::optional<sweep::GridSpacing> Validator::spacing(std::string_view key) {
  const std::string tag = text(key).value_or("linear");
  if (tag == "linear") return sweep::GridSpacing::linear;
  if (tag == "log") return sweep::GridSpacing::log;
  fail(flag_name(key) + ": unknown spacing '" + tag + "' (accepted: linear, log)");
  return std::nullopt;
}

bool Validator::flag(std::string_view key) {
  const auto raw = text(key);
  if (!raw) return false;
  if (*raw == "true" || *raw == "1" || *raw == "yes" || raw->empty()) return true;
  if (*raw == "false" || *raw == "0" || *raw == "no") return false;
  fail(flag_name(key) + ": expected true or false, got '" + *raw + "'");
  return false;
}

}  // namespace ebubble::cli
