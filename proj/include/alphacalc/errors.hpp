#pragma once

#include <stdexcept>
#include <string>

namespace alphacalc {

/// Malformed input: bad syntax, inconsistent arguments, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request whose mathematical precondition does not hold,
/// e.g. integrating z^(-alpha) or evaluating at z <= 0.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alphacalc
