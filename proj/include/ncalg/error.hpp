#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncalg {

enum class ErrorKind {
  DivisionByZero,
  MixedFields,
  NoCubeRoot,
  DimensionMismatch,
  IncompleteBasis,
  ParseError,
  HomogeneityError,
  UnknownGenerator,
  CharThree,
  PreconditionViolated,
  DegenerateDenominator,
  ProbeCollision,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the input-format family (mapped to exit status 2 by the CLI).
  bool is_parse_error() const noexcept {
    return kind_ == ErrorKind::ParseError ||
           kind_ == ErrorKind::HomogeneityError ||
           kind_ == ErrorKind::UnknownGenerator ||
           kind_ == ErrorKind::CharThree;
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + detail),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ncalg
