#pragma once

#include <stdexcept>
#include <string>

#include "meridian/format.hpp"

namespace meridian {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function was evaluated outside its domain (log of a non-positive
// number, a point outside the parameter interval, ...). `at()` is the
// evaluation point.
class DomainError : public Error {
 public:
  DomainError(const std::string& reason, double at)
      : Error(reason + " (at t = " + format_real(at) + ")"), reason_(reason), at_(at) {}

  const std::string& reason() const noexcept { return reason_; }
  double at() const noexcept { return at_; }

 private:
  std::string reason_;
  double at_;
};

// Input text or parameters do not describe a valid object.
class SpecError : public Error {
 public:
  using Error::Error;
};

// phi_dot^2 + phi^2 vanished, or a similar degenerate configuration.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// A profile invariant (f > 0, f' != 0, -f'g' > 0) was violated.
class ProfileInvariantError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace meridian
