#pragma once

#include <stdexcept>
#include <string>

namespace brittle {

/// Malformed graph6 / edge-list / class-file input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph class whose forbidden list violates the 2-connectivity requirement.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver refused an input that exceeds its configured size limits.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace brittle
