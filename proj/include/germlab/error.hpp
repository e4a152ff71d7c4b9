#pragma once

#include <stdexcept>
#include <string>

namespace germlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (e.g. inverting zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A cylinder is too coarse for the rule list of a prefix map.
class NeedsRefinement : public Error {
 public:
  using Error::Error;
};

/// A construction has no solution for the given input.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Ball enumeration exceeded the configured element budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of refinement depth.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

/// A list of cosets whose union misses part of the group.
class NotACover : public Error {
 public:
  using Error::Error;
};

/// Input that fails to parse or validate (CLI, JSON, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A verification suite name that is not registered.
class UnknownSuite : public Error {
 public:
  using Error::Error;
};

/// A suite configuration field that is unknown or out of range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace germlab
