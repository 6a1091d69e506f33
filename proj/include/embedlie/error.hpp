#pragma once

#include <stdexcept>
#include <string>

namespace embedlie {

/// Rejected user input (bad rank, malformed expression, out-of-range node).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed identity that must hold did not. Always a bug in this library.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace embedlie
