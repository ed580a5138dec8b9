#pragma once

#include <stdexcept>
#include <string>

namespace wtdfisher {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or violated model invariant; the message carries
/// the offending field path when one is known.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The Liouvillian kernel is degenerate or the steady state is dark.
class ErgodicityError : public Error {
 public:
  using Error::Error;
};

/// Survival probability at tau_max exceeds the requested tail bound.
class TailError : public Error {
 public:
  using Error::Error;
};

/// Trajectory time step too coarse for first-order jump probabilities.
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference derivative produced NaN or infinity.
class NonFiniteDerivativeError : public Error {
 public:
  using Error::Error;
};

/// Fisher information is zero, negative or non-finite where a positive
/// value is required (gain construction).
class DegenerateInformationError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a tau grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace wtdfisher
