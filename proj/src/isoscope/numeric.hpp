#pragma once

// Multiprecision complex root isolation, used only to *propose* exact
// candidates; every caller re-verifies in exact arithmetic.

#include <optional>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "isoscope/integer.hpp"

namespace isoscope::numeric {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the working precision (decimal digits) for newly created Reals on
// this thread and restores the previous value on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct Complex {
  Real re, im;
};

Real to_real(const arith::Integer& z);
Real to_real(const arith::Rational& q);

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& a);

/// All complex roots (with multiplicity) of sum coeffs[i] x^i, leading
/// coefficient nonzero, by Aberth-Ehrlich iteration at the current
/// precision. Returns nullopt if the iteration does not settle.
std::optional<std::vector<Complex>> polynomial_roots(const std::vector<Complex>& coeffs);

/// Continued-fraction convergents of x whose numerator and denominator are
/// both at most `height` in absolute value.
std::vector<arith::Rational> convergents(const Real& x, const arith::Integer& height);

}  // namespace isoscope::numeric
