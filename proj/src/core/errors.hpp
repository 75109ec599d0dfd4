#pragma once

#include <stdexcept>
#include <string>

namespace metamcmc {

// Base class so the C API can map everything below to a status code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or malformed configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Input outside the domain of an operation (e.g. state outside kernel support).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Operation not supported by this object (e.g. exact sampling of a target
// class without a sampler).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& msg) : Error(msg) {}
};

// Quadrature failed to reach the requested tolerance. Carries the best
// estimate so callers can report it.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& msg, double best_value, double error_estimate)
      : Error(msg), best_value(best_value), error_estimate(error_estimate) {}
  double best_value;
  double error_estimate;
};

// Eigen-iteration did not converge within its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : Error(msg), residual(residual) {}
  double residual;
};

// Discretization could not be built (grid too small, degenerate mass, ...).
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace metamcmc
