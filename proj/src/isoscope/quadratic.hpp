#pragma once

#include <optional>
#include <string>

#include "isoscope/field.hpp"
#include "isoscope/integer.hpp"

namespace isoscope::arith {

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt d). d is squarefree,
/// nonzero and not 1; elements of different fields never mix.
class QuadElem {
 public:
  QuadElem(int64_t d, Rational a, Rational b = 0);

  int64_t d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  QuadElem conj() const { return QuadElem(d_, a_, -b_, Trusted{}); }
  Rational norm() const { return a_ * a_ - d_ * (b_ * b_); }
  Rational trace() const { return 2 * a_; }

  QuadElem operator-() const { return QuadElem(d_, -a_, -b_, Trusted{}); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem inverse() const;

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  struct Trusted {};
  QuadElem(int64_t d, Rational a, Rational b, Trusted) : d_(d), a_(std::move(a)), b_(std::move(b)) {}
  void check_same(const QuadElem& o) const;

  int64_t d_;
  Rational a_;
  Rational b_;
};

/// Square root inside Q(sqrt d), or nullopt when z is not a square there.
std::optional<QuadElem> quad_sqrt(const QuadElem& z);

class QuadField {
 public:
  using Elem = QuadElem;
  explicit QuadField(int64_t d);

  int64_t d() const { return d_; }
  Elem zero() const { return Elem(d_, 0); }
  Elem one() const { return Elem(d_, 1); }
  Elem from_int(int64_t n) const { return Elem(d_, Rational(Integer(static_cast<long>(n)))); }
  Elem from_rational(const Rational& r) const { return Elem(d_, r); }
  Elem from_integer(const Integer& n) const { return Elem(d_, Rational(n)); }
  Elem sqrt_d() const { return Elem(d_, 0, 1); }
  Elem make(const Rational& a, const Rational& b) const { return Elem(d_, a, b); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  bool is_zero(const Elem& a) const { return a.a() == 0 && a.b() == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int64_t characteristic() const { return 0; }

 private:
  int64_t d_;
};

}  // namespace isoscope::arith
