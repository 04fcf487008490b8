#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kfp {

enum class ErrorCode {
  ZeroTriple,
  CoincidentPoints,
  CoincidentLines,
  DuplicatePoint,
  NonPositiveMultiplicity,
  LengthMismatch,
  OutOfRange,
  EmptyScheme,
  IncompleteReduction,
  SandwichViolation,
  StrategyInapplicable,
  InvalidType,
  InvalidLineCount,
  TypeMismatch,
  SinglePointType,
  MultiplicityBelowThreshold,
  InvalidConfiguration,
  GenerationFailed,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kfp
