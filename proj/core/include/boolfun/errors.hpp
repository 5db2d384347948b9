#pragma once

#include <stdexcept>
#include <string>

namespace boolfun {

/// An operation would exceed a configured size cap: dense tables past
/// the dimension cap, naive convolution past its quadratic-cost cap,
/// exhaustive enumeration past n = 4.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number of the
/// offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace boolfun
