// errors.hpp — error taxonomy shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace dpt {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied parameter; rejected before any work starts.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Fock cutoff too small for the requested operator.
class InvalidCutoffError : public Error {
 public:
  using Error::Error;
};

// gamma = 0: the dissipative model degenerates.
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

// Operands with mismatched dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An iterative process hit its cap before reaching tolerance.
class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& msg, double residual, double t)
      : Error(msg), last_residual(residual), last_time(t) {}
  double last_residual;
  double last_time;
};

// The Fock cutoff cannot represent the state to tolerance.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& msg, double edge, int advised)
      : Error(msg), edge_weight(edge), advised_cutoff(advised) {}
  double edge_weight;
  int advised_cutoff;
};

// A state or operator violated an invariant mid-computation.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Time integration failed (invariant violation at a recorded time,
// step underflow, or step-count blowup).
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& msg, double t) : Error(msg), failing_time(t) {}
  double failing_time;
};

// Linear solver failure.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Susceptibility ridge never departs from zero within the scanned range.
class NoThresholdError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpt
