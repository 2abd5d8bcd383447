#include "bramsey/error.hpp"

namespace bramsey {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RowCountMismatch: return "RowCountMismatch";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::UnsupportedRedTarget: return "UnsupportedRedTarget";
    case ErrorKind::EncodingTooLarge: return "EncodingTooLarge";
    case ErrorKind::IncompleteModel: return "IncompleteModel";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace bramsey
