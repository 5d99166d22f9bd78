#include "isoscope/error.hpp"

namespace isoscope {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::SpecialJ: return "SpecialJ";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::ResidueCharacteristic: return "ResidueCharacteristic";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::PoleAtS: return "PoleAtS";
    case ErrorCode::PoleInOrbit: return "PoleInOrbit";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace isoscope
