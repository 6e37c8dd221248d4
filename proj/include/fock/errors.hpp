#pragma once

#include <stdexcept>
#include <string>

namespace fock {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Structural precondition violated (sizes, grids, index windows).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A numerical result could not be certified to the requested tolerance.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string &what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double error_estimate_;
};

/// A configured work cap (series terms, node budget) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Sampled data does not fit any member of a classification ladder.
class ClassificationError : public Error {
public:
  using Error::Error;
};

} // namespace fock
