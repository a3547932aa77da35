#pragma once

#include <stdexcept>
#include <string>

namespace depthkit {

// Malformed text input (matrix files, group specs, cycle notation).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition: zero rows in
// an inclusion matrix, H not contained in G, dimension mismatches, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because it would exceed a configured size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace depthkit
