#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdalg {

enum class ErrorCode {
  MalformedLiteral,
  ZeroDenominator,
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  AmbientMismatch,
  SizeMismatch,
  MalformedTable,
  NotAssociative,
  NotAnIdeal,
  NonMonic,
  AlgebraMismatch,
  NoValidMethod,
  BudgetExceeded,
  NotUnital,
  NotInvertible,
  NotMatrixAlgebra,
  NotCentral,
  UnsupportedAlgebra,
  NotAComplement,
  UnitNotFixed,
  CharacteristicViolation,
  UnknownFixture,
  MalformedInput,
};

/// Stable upper-case token for a code, e.g. "NOT_ASSOCIATIVE".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fdalg
