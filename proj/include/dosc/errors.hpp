#pragma once

#include <stdexcept>

namespace dosc {

// Bad parameters or malformed input.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (negative argument, divergent weight).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The grid cannot resolve the requested oscillation.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dosc

namespace dosc {

// A verification experiment failed (for example the identity gate).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dosc
