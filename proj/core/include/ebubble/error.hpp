#pragma once

#include <stdexcept>
#include <string>

namespace ebubble {

/// Precondition violation on a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Conversion or arithmetic across incompatible physical dimensions.
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical procedure could not establish or keep a bracket.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ebubble
