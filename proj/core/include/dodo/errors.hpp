#pragma once

#include <stdexcept>
#include <string>

namespace dodo {

/// An instance, bound, or request outside its admissible range.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Schedule dimensions do not match the instance they are checked against.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructor was asked to build a schedule for an infeasible input.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force search refuses instances whose N*D exceeds its gate.
class SizeGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files (instance, schedule, certificate, 3-partition).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dodo
