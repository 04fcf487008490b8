#include "kfp/error.hpp"
#include "kfp/integer.hpp"

namespace kfp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyScheme: return "EmptyScheme";
    case ErrorCode::IncompleteReduction: return "IncompleteReduction";
    case ErrorCode::SandwichViolation: return "SandwichViolation";
    case ErrorCode::StrategyInapplicable: return "StrategyInapplicable";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::InvalidLineCount: return "InvalidLineCount";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::SinglePointType: return "SinglePointType";
    case ErrorCode::MultiplicityBelowThreshold: return "MultiplicityBelowThreshold";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace kfp
