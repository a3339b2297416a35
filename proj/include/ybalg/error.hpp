#pragma once

#include <stdexcept>
#include <string>

namespace ybalg {

/// Raised when a computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed input (bad generator, unknown kind, parse failure).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ybalg
