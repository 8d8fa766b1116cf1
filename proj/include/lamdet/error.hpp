#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamdet {

enum class ErrorCode {
  Shape,
  Range,
  RowSum,
  Alternation,
  NotACumulant,
  SizeMismatch,
  InvariantBroken,
  ResourceLimit,
  NotDivisible,
  DivZero,
  UnboundAtom,
  ZeroBinding,
  ParseError,
  ShapeMismatch,
  IndexError,
  ZeroSubstitutionIntoNegativePower,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All domain failures surface as this exception; the code is stable and is
// what the CLI reports on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lamdet
