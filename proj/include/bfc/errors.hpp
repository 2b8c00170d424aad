#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

/// Raised when an operation that requires a non-zero function receives the
/// zero function (most trade-off statements are vacuous or undefined there).
class zero_function_error : public std::invalid_argument {
public:
  explicit zero_function_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised when an operation that requires a non-empty family receives an
/// empty one.
class empty_family_error : public std::invalid_argument {
public:
  explicit empty_family_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised when a dimension exceeds the configured cap for an operation.
class dimension_cap_error : public std::invalid_argument {
public:
  explicit dimension_cap_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised when a documented precondition does not hold for the given input.
class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised on malformed input files; the message carries file:line context.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bfc
