#pragma once

#include <stdexcept>
#include <string>

namespace latgreen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function: a pole, a branch cut,
/// or a malformed parameter record.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The spectral parameter is outside the validity region of the requested
/// representation, or no representation covers it.
class RegionError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double err_estimate)
      : Error(what), err_estimate_(err_estimate) {}

  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double err_estimate_;
};

}  // namespace latgreen
