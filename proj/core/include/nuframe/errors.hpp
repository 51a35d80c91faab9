#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nuframe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in GF(q)") {}
};

/// An integer that is not invertible in the prime subfield (divisible by p).
class NonUnitScalar : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Invalid field or system parameters. Maps to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Requested scale range cannot resolve the input. Treated as a configuration error by the CLI.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (CSV or mask rows). Maps to CLI exit code 3.
class DataError : public Error {
 public:
  DataError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nuframe
