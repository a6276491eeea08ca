#include "pencil/error.hpp"

namespace pencil {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotChain: return "NotChain";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadSubspace: return "BadSubspace";
    case ErrorKind::ParamMismatch: return "ParamMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace pencil
