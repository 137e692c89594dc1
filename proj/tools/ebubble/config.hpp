#pragma once

// Run configuration: flat `key = value` settings merged from an optional
// config file and command-line flags, then validated into typed values.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebubble/model.hpp"
#include "ebubble/sweep.hpp"
#include "ebubble/units.hpp"

namespace ebubble::cli {

/// Ordered so that echoing the effective configuration is deterministic.
using RawConfig = std::map<std::string, std::string>;

/// Every key a config file may contain. Flags use the same names with `--`.
const std::vector<std::string_view>& known_keys();

/// Canonical key spelling: lower case, `_` replaced by `-`.
std::string normalize_key(std::string_view key);

struct ParsedFile {
  RawConfig values;
  std::vector<std::string> errors;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and
/// malformed lines are reported with their line numbers.
ParsedFile parse_config_text(std::string_view text, std::string_view source_name);

enum class OutputFormat { csv, json };

/// Collects validation errors so that all of them can be reported together.
class Validator {
 public:
  explicit Validator(const RawConfig& raw) : raw_(raw) {}

  bool has(std::string_view key) const;
  std::optional<std::string> text(std::string_view key) const;

  /// Reads a finite number. Missing required keys and parse failures are
  /// recorded and produce an empty result.
  std::optional<double> number(std::string_view key, bool required);
  std::optional<std::vector<double>> number_list(std::string_view key, bool required);
  std::optional<std::size_t> count(std::string_view key);
  std::optional<units::Unit> unit(std::string_view key, units::Dimension dimension);
  std::optional<model::ZeroPointModel> zero_point_model();
  std::optional<units::ProfileName> profile();
  std::optional<OutputFormat> format();
  std::optional<sweep::GridSpacing> spacing(std::string_view key);
  bool flag(std::string_view key);

  void fail(std::string message) { errors_.push_back(std::move(message)); }
  const std::vector<std::string>& errors() const noexcept { return errors_; }
  bool ok() const noexcept { return errors_.empty(); }

 private:
  const RawConfig& raw_;
  std::vector<std::string> errors_;
};

/// Strict locale-independent parse of a whole string as a finite double.
std::optional<double> parse_double(std::string_view text);

}  // namespace ebubble::cli
