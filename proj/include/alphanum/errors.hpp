#pragma once

#include <stdexcept>
#include <string>

namespace alphanum {

/// Raised when a request would exceed a configured size cap (sieve entries,
/// divisor counts). Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed user input (order literals, unknown ids). Maps to CLI
/// exit code 1.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace alphanum
