#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspherix {

// Base of every domain error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (presentations, matrices, model specs).
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  explicit ParseError(std::string const& what) : Error(what) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// An idempotent matrix E that fails E^2 = E or contradicts the presentation.
class InvalidIdempotent : public Error {
 public:
  using Error::Error;
};

// pair_divisors: a sub-basis vector outside the integer span of the ambient basis.
class NotContained : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold failed; indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace aspherix
