#pragma once

#include <stdexcept>
#include <string>

namespace fgnsr {

/// Malformed input files or arguments.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside an algorithm (zero operator, divergence,
/// exhausted rank).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgnsr
