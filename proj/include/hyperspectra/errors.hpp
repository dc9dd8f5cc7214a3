#ifndef HYPERSPECTRA_ERRORS_HPP
#define HYPERSPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperspectra {

/// Base of every library exception. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad vertex ids, wrong lengths, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A requested instance exceeds a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation would produce multiple edges or another invalid structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// The host has more cyclic structure than the operation understands.
class UnsupportedStructureError : public Error {
 public:
  using Error::Error;
};

/// classify() preconditions failed; the message names the predicate.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// Root finding failed or a solved certificate did not self-check.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A subnormal witness came out with nonpositive slack.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Power iteration ran out of iterations before the brackets closed.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lambda_min, double lambda_max)
      : Error(what), lambda_min_(lambda_min), lambda_max_(lambda_max) {}

  double lambda_min() const noexcept { return lambda_min_; }
  double lambda_max() const noexcept { return lambda_max_; }

 private:
  double lambda_min_;
  double lambda_max_;
};

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_ERRORS_HPP
