#pragma once

// Entry point of the `ebubble` command-line tool, callable in-process.
//
//   ebubble [--config FILE] <radius|critical|curve|sweep|estimate-gamma> [flags]
//
// Exit codes: 0 success, 2 invalid input, 3 internal cross-check failure,
// 4 I/O failure.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ebubble::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kCrossCheckFailure = 3,
  kIoFailure = 4,
};

/// Relative agreement required between closed-form and numeric results.
inline constexpr double kCrossCheckTolerance = 1e-8;

struct Environment {
  /// Value of EBUBBLE_CONFIG, used when --config is not given.
  std::optional<std::string> config_path;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace ebubble::cli
