#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration-based certificate would exceed its size budget.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

/// A post-condition that should hold by construction failed. Always a bug.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Input data violates an algebraic precondition (not an ideal, not restricted, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rlie
