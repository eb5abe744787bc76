#pragma once

#include <stdexcept>
#include <string>

namespace mgdw {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// An iterative scheme ran out of budget; carries the best estimate.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& msg, double best, double err)
      : Error(msg), best_estimate(best), error_estimate(err) {}
  double best_estimate;
  double error_estimate;
};

// Integrand produced a NaN or infinity.
class IntegrandError : public Error {
public:
  using Error::Error;
};

// Energy below the potential somewhere inside the requested interval.
class ClassicallyForbiddenError : public Error {
public:
  using Error::Error;
};

// No sign change of the objective inside the supplied bracket.
class NoRootError : public Error {
public:
  using Error::Error;
};

// Energy does not intersect the potential (no classical turning points).
class NoTurningPointsError : public Error {
public:
  using Error::Error;
};

// Turning-point count differs from what the quantization scheme expects.
class WrongTopologyError : public Error {
public:
  using Error::Error;
};

// Coordinate transform is not monotone on the requested range.
class TransformError : public Error {
public:
  using Error::Error;
};

// Mapping endpoints fail to land on the auxiliary turning points.
class QuantizationViolatedError : public Error {
public:
  using Error::Error;
};

// Coupling too large for a negative-energy ground state.
class NoBoundStateError : public Error {
public:
  using Error::Error;
};

// (z, coupling) pair does not satisfy the quantization condition.
class InconsistentParametersError : public Error {
public:
  using Error::Error;
};

// Grid too coarse for the finite-difference estimates requested.
class ResolutionError : public Error {
public:
  using Error::Error;
};

}  // namespace mgdw
