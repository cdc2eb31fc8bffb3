#pragma once

#include <stdexcept>

namespace lindep {

/// Base class for all lindep errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two aligned series have different lengths.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Too few observations, or otherwise unusable input.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A series has zero variance where spread is required.
class ConstantSeries : public Error {
 public:
  using Error::Error;
};

/// Rank-deficient regression design matrix.
class SingularDesign : public Error {
 public:
  using Error::Error;
};

/// Fewer observations than bins.
class TooFewPoints : public Error {
 public:
  using Error::Error;
};

/// Histogram counts do not sum to the stated total.
class CountMismatch : public Error {
 public:
  using Error::Error;
};

/// Bias correction applied twice.
class AlreadyCorrected : public Error {
 public:
  using Error::Error;
};

/// |rho| >= 1, where the Gaussian identity diverges.
class PerfectCorrelation : public Error {
 public:
  using Error::Error;
};

/// Series shorter than the requested window/lag structure.
class TooShort : public Error {
 public:
  using Error::Error;
};

/// Constant series handed to a scale-relative computation.
class ZeroVariance : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain (rho, probabilities, orders, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A calibrated generator could not reach its target within budget.
class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (row/column context in the message).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lindep
