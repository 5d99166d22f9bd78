#pragma once

// Truncated Laurent series sum_{e >= start} c_e q^e, known exactly for
// exponents below `prec`. Precision is tracked through every operation so a
// caller can never read a coefficient that was not actually determined.

#include <algorithm>
#include <string>
#include <vector>

#include "isoscope/error.hpp"
#include "isoscope/integer.hpp"

namespace isoscope::arith {

template <class C>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int start, int prec) : start_(start), prec_(std::max(prec, start)), c_(prec_ - start_) {}
  static LaurentSeries monomial(const C& coef, int e, int prec) {
    LaurentSeries s(e, prec);
    if (e < prec) s.c_[0] = coef;
    return s;
  }

  int start() const { return start_; }
  int prec() const { return prec_; }

  // Lowest exponent with a nonzero coefficient, or prec() if none is known.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return start_ + static_cast<int>(i);
    return prec_;
  }

  C coeff(int e) const {
    if (e >= prec_) fail(ErrorCode::PrecisionExhausted, "coefficient of q^" + std::to_string(e) + " beyond precision");
    if (e < start_) return C(0);
    return c_[e - start_];
  }
  void set(int e, const C& v) {
    if (e < start_ || e >= prec_) fail(ErrorCode::InvalidArgument, "exponent outside stored range");
    c_[e - start_] = v;
  }
  C& at(int e) { return c_[e - start_]; }

  LaurentSeries truncated(int prec) const {
    LaurentSeries r(start_, std::min(prec, prec_));
    for (int e = r.start_; e < r.prec_; ++e) r.c_[e - start_] = c_[e - start_];
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r(std::min(a.start_, b.start_), std::min(a.prec_, b.prec_));
    for (int e = r.start_; e < r.prec_; ++e) r.c_[e - r.start_] = a.coeff(e) + b.coeff(e);
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r(std::min(a.start_, b.start_), std::min(a.prec_, b.prec_));
    for (int e = r.start_; e < r.prec_; ++e) r.c_[e - r.start_] = a.coeff(e) - b.coeff(e);
    return r;
  }
  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const C& k) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x *= k;
    return r;
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int va = a.valuation(), vb = b.valuation();
    const int prec = std::min(a.prec_ + vb, b.prec_ + va);
    LaurentSeries r(va + vb, prec);
    if (va >= a.prec_ || vb >= b.prec_) return r;
    const int na = a.prec_ - va, nb = b.prec_ - vb;
    const C* pa = a.c_.data() + (va - a.start_);
    const C* pb = b.c_.data() + (vb - b.start_);
    const int n = prec - (va + vb);
    for (int i = 0; i < std::min(na, n); ++i) {
      if (pa[i] == 0) continue;
      const int jmax = std::min(nb, n - i);
      C* out = r.c_.data() + i;
      for (int j = 0; j < jmax; ++j) out[j] += pa[i] * pb[j];
    }
    return r;
  }

  /// Multiplicative inverse; the leading coefficient must be a unit of C
  /// (exact division is checked).
  LaurentSeries inverse() const {
    const int v = valuation();
    if (v >= prec_) fail(ErrorCode::DivisionByZero, "inverse of a series with no known nonzero term");
    const int n = prec_ - v;
    const C* a = c_.data() + (v - start_);
    LaurentSeries r(-v, -v + n);
    C* b = r.c_.data();
    const C lead = a[0];
    for (int k = 0; k < n; ++k) {
      C s = k == 0 ? C(1) : C(0);
      for (int i = 1; i <= k; ++i) s -= a[i] * b[k - i];
      b[k] = exact_div(s, lead);
    }
    return r;
  }

  LaurentSeries pow(unsigned e) const {
    LaurentSeries r = monomial(C(1), 0, prec_ - valuation());
    LaurentSeries base = *this;
    bool first = true;
    while (e) {
      if (e & 1) {
        r = first ? base : r * base;
        first = false;
      }
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// q -> q^m.
  LaurentSeries inflate(int m) const {
    LaurentSeries r(start_ * m, (prec_ - 1) * m + 1);
    for (int e = start_; e < prec_; ++e) r.c_[(e - start_) * m] = c_[e - start_];
    return r;
  }

  /// Exponents e with e ≡ 0 mod m, re-indexed as e/m.
  LaurentSeries extract_multiples(int m) const {
    const int first = -floor_div(-start_, m);
    const int last_known = floor_div(prec_ - 1, m);
    LaurentSeries r(first, last_known + 1);
    for (int k = first; k <= last_known; ++k) r.c_[k - first] = c_[k * m - start_];
    return r;
  }

  /// True when every known coefficient is zero.
  bool is_zero() const { return valuation() >= prec_; }

 private:
  static int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
  static C exact_div(const C& s, const C& lead) {
    if constexpr (std::is_same_v<C, Integer>) {
      if (lead == 1) return s;
      if (lead == -1) return -s;
      if (s % lead != 0) fail(ErrorCode::DivisionByZero, "series inverse needs a unit leading coefficient");
      return s / lead;
    } else {
      return s / lead;
    }
  }

  int start_ = 0;
  int prec_ = 0;
  std::vector<C> c_;
};

using IntSeries = LaurentSeries<Integer>;
using RatSeries = LaurentSeries<Rational>;

/// prod_{n>=1} (1 - q^n) through q^{N-1}, from Euler's pentagonal theorem.
IntSeries euler_product(int N);
/// E_4 = 1 + 240 sum sigma_3(n) q^n through q^{N-1}.
IntSeries eisenstein_e4(int N);
/// Delta = q prod (1 - q^n)^24 through q^{N-1}.
IntSeries delta_q_expansion(int N);
/// j = E_4^3 / Delta = q^{-1} + 744 + 196884 q + ..., exact through q^{N-1}.
IntSeries j_q_expansion(int N);

}  // namespace isoscope::arith
