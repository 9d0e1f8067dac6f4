#pragma once

#include <stdexcept>
#include <string>

namespace horolab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs violate an operation's contract (wrong base point, wrong length).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Point at or beyond the injectivity bound, or outside a map's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integration drift above the accepted threshold.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class ShootingFailure : public Error {
 public:
  ShootingFailure(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Jacobi field vanished before the requested radius.
class ConjugatePointError : public Error {
 public:
  using Error::Error;
};

/// An identity was requested on a field that does not meet its hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace horolab
