#pragma once

#include <stdexcept>
#include <string>

namespace weilab {

// Base of all domain errors surfaced by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text or algebra spec file; carries a position.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// Operands belong to different ring contexts or algebras.
struct ContextMismatch : Error {
  using Error::Error;
};

// The presented quotient is not a local algebra (a generator has a nonzero
// constant term, or 1 falls into the ideal closure).
struct NonLocalError : Error {
  using Error::Error;
};

// Invalid arguments at the API boundary (wrong image count, missing unknowns,
// index out of range, dimension cap exceeded).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace weilab
