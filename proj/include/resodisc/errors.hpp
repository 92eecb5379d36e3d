#pragma once

#include <stdexcept>
#include <string>

namespace resodisc {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad wiring between inputs: mismatched dimensions, unresolved grids,
/// missing files. The scenario cannot be assembled as requested.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// An input object violates one of its declared invariants.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Evaluation failed numerically: overflow, divergence, non-convergence.
class NumericError : public Error {
public:
  using Error::Error;
};

/// A caller asked for something outside an operation's domain
/// (out-of-range index, unknown stage name).
class UsageError : public Error {
public:
  using Error::Error;
};

/// Mathematically out-of-domain input (e.g. gain above the lasing threshold).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace resodisc
