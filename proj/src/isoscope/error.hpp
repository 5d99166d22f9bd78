#pragma once

#include <stdexcept>
#include <string>

namespace isoscope {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  DivisionByZero,
  CompositeModulus,
  ReducibleModulus,
  ZeroPolynomial,
  BoundExceeded,
  Unclassifiable,
  NotFound,
  WrongShape,
  SpecialJ,
  BadCharacteristic,
  FieldTooLarge,
  BadReduction,
  NotIntegral,
  ResidueCharacteristic,
  PrecisionExhausted,
  InsufficientSamples,
  PoleAtS,
  PoleInOrbit,
  ZeroPoint,
  SearchFailed,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace isoscope
