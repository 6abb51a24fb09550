#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Raised when inputs are well-formed but outside an operation's mathematical domain
/// (non-positive geometric constants, complex branch, degenerate Hadamard estimate).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a textual input cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qseries
