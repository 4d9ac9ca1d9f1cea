#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

/// Base class for every error raised by this library.
class SpectraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model parameter or argument violates its invariant.
class InvalidParameterError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// The Kratzer tail is non-attractive (zeta >= 0): the discrete spectrum is empty.
class NoBoundStateError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// A screened state fails the admissibility inequality (k_b' <= 0).
class InadmissibleStateError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// A series evaluation ran out of terms before meeting the requested tolerance.
class ToleranceNotReachedError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// An iterative refinement exhausted its budget without converging.
class NonConvergenceError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// The discretized operator has fewer bound states than requested.
class InsufficientBoundStatesError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// The potential is monotone on the search bracket: no interior minimum.
class NoMinimumError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// Configuration file cannot be read, parsed, or validated.
class ConfigError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

}  // namespace monopole
