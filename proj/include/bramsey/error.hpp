#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bramsey {

enum class ErrorKind {
  IndexOutOfRange,
  RowCountMismatch,
  CapacityExceeded,
  InvalidSpec,
  SpecMismatch,
  BadK,
  UnsupportedRedTarget,
  EncodingTooLarge,
  IncompleteModel,
  UnknownVariable,
  SolverFailure,
  TooLarge,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bramsey
