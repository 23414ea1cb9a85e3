#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpscaffold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated (index range,
/// size mismatch, non-positive parameters, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input was required to be totally positive and is not.
class NotTotallyPositiveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Cauchon's algorithm met a zero pivot. Carries the 1-based pivot position.
class ZeroPivotError : public NotTotallyPositiveError {
 public:
  ZeroPivotError(std::size_t row, std::size_t col)
      : NotTotallyPositiveError("zero pivot at (" + std::to_string(row) + "," +
                                std::to_string(col) + "): matrix is not totally positive"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Malformed matrix text. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tpscaffold
