#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigrade {

enum class ErrorKind {
  DimensionMismatch,
  RingMismatch,
  BadRing,
  UnitIdeal,
  ZeroIdeal,
  ZeroModule,
  EmptyList,
  WrongBlock,
  BadProfile,
  PreconditionFailed,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised by text-format readers. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// Runtime assertion of a mathematical identity the library relies on.
/// Failure means a bug, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::Internal, what);
}

}  // namespace bigrade
