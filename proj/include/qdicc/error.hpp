#pragma once

#include <stdexcept>
#include <string>

namespace qdicc {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind { Parse, Physics, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed configuration or command line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

/// A physical precondition does not hold (invalid parameters, forbidden
/// channel, undefined force, wrong setup for a formula).
class PhysicsError : public Error {
 public:
  explicit PhysicsError(const std::string& what) : Error(ErrorKind::Physics, what) {}
};

/// The numerics broke down: singular network, integration instability,
/// logarithm of a non-positive quantity.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Physics: return 3;
    case ErrorKind::Numerical: return 4;
  }
  return 1;
}

}  // namespace qdicc
