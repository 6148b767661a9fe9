#pragma once

#include <stdexcept>
#include <string>

namespace zetaband {

// Base of every error the library raises. The CLI maps these onto exit codes:
// DomainError/RangeError/ConvergenceError -> 1, IoError/ParseError -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Argument outside the mathematical domain (pole of Gamma, s = 1, lambda = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// Argument outside the supported or admissible range (height, (sigma, t) window, coverage).
class RangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

// Evaluation point too close to a zero of zeta for the log-derivative to be meaningful.
class NearZeroError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "near_zero"; }
};

// A numerical procedure failed to meet its tolerance (quadrature, root bracketing, tails).
class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "convergence"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line) : Error(msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

}  // namespace zetaband
