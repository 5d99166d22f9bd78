#pragma once

// Dense univariate polynomials over any Field context. A polynomial is a
// coefficient vector, lowest degree first, with no trailing zeros; the zero
// polynomial is the empty vector.

#include <cstdint>
#include <utility>
#include <vector>

#include "isoscope/error.hpp"
#include "isoscope/field.hpp"

namespace isoscope::arith {

template <Field F>
using Poly = std::vector<typename F::Elem>;

namespace poly {

template <Field F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <Field F>
int degree(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <Field F>
Poly<F> constant(const F& f, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

template <Field F>
Poly<F> monomial(const F& f, const typename F::Elem& c, int deg) {
  if (f.is_zero(c)) return {};
  Poly<F> r(deg + 1, f.zero());
  r[deg] = c;
  return r;
}

template <Field F>
Poly<F> x(const F& f) {
  return monomial(f, f.one(), 1);
}

template <Field F>
bool is_one(const F& f, const Poly<F>& a) {
  return a.size() == 1 && f.equal(a[0], f.one());
}

template <Field F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!f.equal(a[i], b[i])) return false;
  return true;
}

template <Field F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <Field F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <Field F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r(a.size(), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(f, r);
  return r;
}

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <Field F>
Poly<F> pow(const F& f, Poly<F> base, unsigned e) {
  Poly<F> r = constant(f, f.one());
  while (e) {
    if (e & 1) r = mul(f, r, base);
    e >>= 1;
    if (e) base = mul(f, base, base);
  }
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> rem = a;
  Poly<F> quo(a.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (f.is_zero(rem[i])) continue;
    auto c = f.mul(rem[i], lead_inv);
    int shift = i - (static_cast<int>(b.size()) - 1);
    quo[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b[j]));
  }
  trim(f, rem);
  trim(f, quo);
  return {quo, rem};
}

template <Field F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <Field F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

/// Monic gcd (zero when both inputs are zero).
template <Field F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    Poly<F> r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

template <Field F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, f.zero());
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], f.from_int(static_cast<int64_t>(i)));
  trim(f, r);
  return r;
}

template <Field F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(f, mul(f, a, b), m);
}

/// base^e mod m for a 64-bit exponent.
template <Field F>
Poly<F> powmod(const F& f, Poly<F> base, uint64_t e, const Poly<F>& m) {
  Poly<F> r = rem(f, constant(f, f.one()), m);
  base = rem(f, base, m);
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return r;
}

template <Field F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  typename F::Elem r = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

}  // namespace poly
}  // namespace isoscope::arith
