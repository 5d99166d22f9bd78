#pragma once

// Field "contexts": small value objects that know how to combine elements.
// Generic algorithms (polynomials, curve formulas) are written against the
// Field concept so they run unchanged over Q, Q(sqrt d), number fields and
// finite fields.

#include <concepts>
#include <cstdint>

#include "isoscope/error.hpp"
#include "isoscope/integer.hpp"

namespace isoscope::arith {

template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b, int64_t n) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.from_int(n) } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, b) } -> std::convertible_to<bool>;
};

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(int64_t n) const { return Rational(Integer(static_cast<long>(n))); }
  Elem from_integer(const Integer& n) const { return Rational(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero rational");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int64_t characteristic() const { return 0; }
};

template <Field F>
typename F::Elem field_pow(const F& f, typename F::Elem base, uint64_t exp) {
  typename F::Elem r = f.one();
  while (exp) {
    if (exp & 1) r = f.mul(r, base);
    exp >>= 1;
    if (exp) base = f.mul(base, base);
  }
  return r;
}

}  // namespace isoscope::arith
