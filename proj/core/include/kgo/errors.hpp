#pragma once

#include <stdexcept>
#include <string>

namespace kgo {

/// Base class for all domain errors raised by this library. Precondition
/// violations (bad constructor arguments) throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The quadratic dispersion relation has a negative discriminant: the
/// requested parameters lie outside the regime with real energy levels.
class ComplexEnergyError : public Error {
 public:
  using Error::Error;
};

/// Both the E^2 and E coefficients of the dispersion relation vanish.
class DegenerateDispersionError : public Error {
 public:
  using Error::Error;
};

/// The charge carried by the mode vanishes, so it cannot be normalized
/// to +-1.
class ZeroDensityError : public Error {
 public:
  using Error::Error;
};

/// Estimated discretization error of the largest requested eigenvalue
/// exceeds 1% of its gap to the next level.
class GridTooCoarseError : public Error {
 public:
  using Error::Error;
};

/// A root-finding iteration failed to converge. Signals an implementation
/// bug, not a user error.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgo
