#include "ordcover/error.hpp"

namespace ordcover {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NonIntegralParams: return "NonIntegralParams";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OutOfRegime: return "OutOfRegime";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace ordcover
