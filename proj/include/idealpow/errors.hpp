#pragma once

#include <stdexcept>
#include <string>

namespace idealpow {

// Bad user-facing input: wrong arity, out-of-range parameters, empty sets.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArityError : public ParameterError {
 public:
  ArityError() : ParameterError("incompatible arity") {}
  explicit ArityError(const std::string& what) : ParameterError(what) {}
};

// An operation's documented precondition was violated by the caller.
class PreconditionError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The brute-force oracle refused to enumerate more products than its cap.
class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical statement that must hold did not. Always a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace idealpow
