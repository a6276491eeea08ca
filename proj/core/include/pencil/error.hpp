#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pencil {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  DivisionByZero,
  BothZero,
  ZeroArgument,
  NotIrreducible,
  NonMonic,
  ShapeError,
  OutOfRange,
  DegreeMismatch,
  DegreeTooLarge,
  NotChain,
  BudgetExceeded,
  BadSubspace,
  ParamMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pencil
