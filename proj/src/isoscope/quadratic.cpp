#include "isoscope/quadratic.hpp"

#include "isoscope/error.hpp"

namespace isoscope::arith {

namespace {

void check_d(int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    fail(ErrorCode::InvalidArgument, "quadratic field parameter must be squarefree and not 0 or 1: " + std::to_string(d));
}

}  // namespace

QuadElem::QuadElem(int64_t d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  check_d(d);
}

void QuadElem::check_same(const QuadElem& o) const {
  if (o.d_ != d_)
    fail(ErrorCode::InvalidArgument,
         "mixing Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_same(o);
  Rational a = a_ * o.a_ + d_ * (b_ * o.b_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt " + std::to_string(d_) + ")");
  return QuadElem(d_, a_ / n, -b_ / n, Trusted{});
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string bpart = (b_ == 1) ? root : (b_ == -1 ? "-" + root : b_.get_str() + "*" + root);
  if (a_ == 0) return bpart;
  if (bpart[0] == '-') return a_.get_str() + bpart;
  return a_.get_str() + "+" + bpart;
}

std::optional<QuadElem> quad_sqrt(const QuadElem& z) {
  const int64_t d = z.d();
  if (z.b() == 0) {
    if (auto r = rational_sqrt(z.a())) return QuadElem(d, *r);
    // (c sqrt d)^2 = c^2 d
    if (auto c = rational_sqrt(z.a() / d)) return QuadElem(d, 0, *c);
    return std::nullopt;
  }
  // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 + d y^2 = a, 2xy = b, and the norm
  // a^2 - d b^2 = (x^2 - d y^2)^2 must be a rational square r^2.
  auto r = rational_sqrt(z.norm());
  if (!r) return std::nullopt;
  for (const Rational& cand : {Rational((z.a() + *r) / 2), Rational((z.a() - *r) / 2)}) {
    auto x = rational_sqrt(cand);
    if (!x || *x == 0) continue;
    QuadElem w(d, *x, z.b() / (2 * *x));
    if (w * w == z) return w;
  }
  return std::nullopt;
}

QuadField::QuadField(int64_t d) : d_(d) { check_d(d); }

}  // namespace isoscope::arith
