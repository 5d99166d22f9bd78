#include "isoscope/numeric.hpp"

#include <algorithm>

namespace isoscope::numeric {

Real to_real(const arith::Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const arith::Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Real abs(const Complex& a) { return boost::multiprecision::hypot(a.re, a.im); }

std::optional<std::vector<Complex>> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return std::vector<Complex>{};
  // Normalize to a monic polynomial.
  std::vector<Complex> c(coeffs.size());
  for (int i = 0; i <= n; ++i) c[i] = coeffs[i] / coeffs[n];
  if (n == 1) return std::vector<Complex>{{-c[0].re, -c[0].im}};

  // Cauchy bound for the initial circle.
  Real radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, abs(c[i]));
  radius += 1;
  Real start_r = std::min(radius, Real(1) + boost::multiprecision::pow(radius, Real(1) / n));
  std::vector<Complex> z(n);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = two_pi * k / n + Real(0.4);
    z[k] = {start_r * cos(ang), start_r * sin(ang)};
  }

  const unsigned digits = Real::default_precision();
  const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 8);
  const int max_iter = 200 + 20 * n + static_cast<int>(digits);

  auto eval = [&](const Complex& x, Complex& p, Complex& dp) {
    p = c[n];
    dp = {0, 0};
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[i];
    }
  };

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex p, dp;
      eval(z[k], p, dp);
      if (abs(p) == 0) {
        done[k] = true;
        continue;
      }
      Complex ratio = p / dp;
      Complex sum{0, 0};
      for (int j = 0; j < n; ++j)
        if (j != k) sum = sum + Complex{1, 0} / (z[k] - z[j]);
      Complex step = ratio / (Complex{1, 0} - ratio * sum);
      z[k] = z[k] - step;
      Real scale = std::max(Real(1), abs(z[k]));
      if (abs(step) <= tol * scale) done[k] = true;
      else all = false;
    }
    if (all) return z;
  }
  return std::nullopt;
}

std::vector<arith::Rational> convergents(const Real& x, const arith::Integer& height) {
  std::vector<arith::Rational> out;
  // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1
  arith::Integer h1 = 1, k1 = 0, h2 = 0, k2 = 1;
  Real r = x;
  for (int step = 0; step < 400; ++step) {
    Real fl = floor(r);
    arith::Integer a;
    mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
    arith::Integer h = a * h1 + h2, k = a * k1 + k2;
    if (abs(h) > height || k > height) break;
    out.push_back(arith::make_rational(h, k));
    h2 = h1;
    k2 = k1;
    h1 = h;
    k1 = k;
    Real frac = r - fl;
    if (frac == 0 || frac < boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) / 2))
      break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace isoscope::numeric
