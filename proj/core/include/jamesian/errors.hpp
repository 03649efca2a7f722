#pragma once

#include <stdexcept>

namespace jamesian {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the legal domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation was requested at (0,0) or (1,1), where no matchup
/// probability is defined.
class UndefinedMatchup : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A construction parameter is invalid (e.g. a power-family exponent
/// below 1, or an unknown model id).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical routine failed to converge or to bracket its
/// target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An ODE trajectory left the admissible strip.
class StepError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// A Monte Carlo trial exceeded the tie-resampling limit.
class TieLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace jamesian
