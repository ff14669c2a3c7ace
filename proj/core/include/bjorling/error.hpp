#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bjorling {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the set where an operation is defined
/// (sqrt of a negative, a point outside a curve interval, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A split-complex number on the light cone re^2 = im^2 has no inverse.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t offset, std::vector<std::string> expected)
      : Error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::string name, std::size_t offset)
      : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        name_(std::move(name)),
        offset_(offset) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class GeodesicDataError : public Error {
 public:
  using Error::Error;
};

class PlaneMismatch : public Error {
 public:
  using Error::Error;
};

/// The tangent plane is degenerate (X_t x X_s is null), so no unit normal exists.
class DegenerateNormal : public Error {
 public:
  using Error::Error;
};

/// Raised by the Weierstrass constructor; carries the worst sample point.
class WeierstrassDataError : public Error {
 public:
  WeierstrassDataError(std::string message, double worst, double t, double s)
      : Error(std::move(message)), worst_(worst), t_(t), s_(s) {}

  double worst() const noexcept { return worst_; }
  double t() const noexcept { return t_; }
  double s() const noexcept { return s_; }

 private:
  double worst_;
  double t_;
  double s_;
};

class IsotropyViolation : public WeierstrassDataError {
 public:
  using WeierstrassDataError::WeierstrassDataError;
};

class ConformalityViolation : public WeierstrassDataError {
 public:
  using WeierstrassDataError::WeierstrassDataError;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};

/// Malformed problem or fixture description (bad JSON shape, bad flag values).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace bjorling
