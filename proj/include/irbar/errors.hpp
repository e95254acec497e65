#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irbar {

enum class Errc {
  InvalidInterval,
  NotInvertible,
  Overflow,
  ParseError,
  ImproperOperand,
  ShapeMismatch,
  Singular,
  ImproperEntry,
  UnsupportedOrder,
  UnsupportedCoupling,
  NoConvergence,
  NoEigenvector,
  NotDiagonalizable,
  NonDiagonal,
  NotAnEigenvalue,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure; `line` and `column` are 1-based (line 0 means a single literal).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(Errc::ParseError, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        reason_(what),
        line_(line),
        column_(column) {}

  const std::string& reason() const noexcept { return reason_; }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace irbar
