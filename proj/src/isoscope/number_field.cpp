#include "isoscope/number_field.hpp"

#include <set>

#include "isoscope/error.hpp"
#include "isoscope/factor.hpp"
#include "isoscope/numeric.hpp"
#include "isoscope/upoly.hpp"

namespace isoscope::arith {

namespace {

using QPoly = Poly<RationalField>;

QPoly to_qpoly(const std::vector<Integer>& m) {
  QPoly r;
  for (const auto& c : m) r.push_back(Rational(c));
  poly::trim(RationalField{}, r);
  return r;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x) {
  Integer r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

// Subset sums of a degree multiset, restricted to proper nonzero values.
std::set<int> proper_subset_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (int d : degs)
    for (int s = n; s >= d; --s)
      if (reach[s - d]) reach[s] = true;
  std::set<int> out;
  for (int s = 1; s < n; ++s)
    if (reach[s]) out.insert(s);
  return out;
}

bool has_integer_root(const std::vector<Integer>& f) {
  const Integer& c0 = f[0];
  if (c0 == 0) return true;
  Integer a = abs(c0);
  if (a > Integer("1000000000000")) return false;  // left to the numeric stage
  uint64_t v = a.get_ui();
  for (uint64_t d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    for (uint64_t e : {d, v / d})
      for (int sgn : {1, -1})
        if (eval_int(f, Integer(static_cast<unsigned long>(e)) * sgn) == 0) return true;
  }
  return false;
}

// Looks for a monic integer factor of degree k by multiplying out subsets of
// numerically computed roots; any hit is confirmed by exact division.
bool numeric_factor_of_degree(const std::vector<Integer>& f, const std::vector<numeric::Complex>& roots, int k) {
  using numeric::Complex;
  using numeric::Real;
  const int n = static_cast<int>(roots.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const Real tol = Real("1e-30");
  const QPoly fq = to_qpoly(f);
  while (true) {
    std::vector<Complex> prod{{1, 0}};
    for (int i : idx) {
      std::vector<Complex> next(prod.size() + 1, Complex{0, 0});
      for (size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] = next[j + 1] + prod[j];
        next[j] = next[j] - prod[j] * roots[i];
      }
      prod = std::move(next);
    }
    bool integral = true;
    QPoly g;
    for (const auto& c : prod) {
      Real r = round(c.re);
      if (abs(c.im) > tol || abs(c.re - r) > tol) {
        integral = false;
        break;
      }
      Integer z;
      mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
      g.push_back(Rational(z));
    }
    if (integral && poly::divmod(RationalField{}, fq, g).second.empty()) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

}  // namespace

bool is_irreducible_over_q(const std::vector<Integer>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n < 1 || monic.back() != 1) fail(ErrorCode::InvalidArgument, "expected a monic polynomial of degree >= 1");
  if (n == 1) return true;
  if (has_integer_root(monic)) return false;
  if (n <= 3) {
    if (monic[0] != 0 && abs(monic[0]) <= Integer("1000000000000")) return true;
  }

  // Degrees of possible rational factors must be subset sums of the factor
  // degrees modulo every good prime.
  std::set<int> possible;
  for (int s = 1; s < n; ++s) possible.insert(s);
  int used = 0;
  for (uint64_t p : primes_up_to(400)) {
    if (possible.empty() || used >= 25) break;
    FiniteField F = FiniteField::make(p, 1);
    FFPoly fp;
    for (const auto& c : monic) fp.push_back(F.from_integer(c));
    poly::trim(F, fp);
    if (!is_squarefree_poly(F, fp)) continue;
    ++used;
    auto sums = proper_subset_sums(distinct_degree_shape(F, fp), n);
    std::set<int> keep;
    for (int s : possible)
      if (sums.count(s)) keep.insert(s);
    possible = std::move(keep);
  }
  if (possible.empty()) return true;

  numeric::PrecisionScope scope(120);
  std::vector<numeric::Complex> coeffs;
  for (const auto& c : monic) coeffs.push_back({numeric::to_real(c), 0});
  auto roots = numeric::polynomial_roots(coeffs);
  if (!roots) fail(ErrorCode::PrecisionExhausted, "root isolation failed in irreducibility test");
  for (int k : possible)
    if (2 * k <= n && numeric_factor_of_degree(monic, *roots, k)) return false;
  return true;
}

NumberField::NumberField(std::vector<Integer> min_poly) : m_(std::move(min_poly)) {
  n_ = static_cast<int>(m_.size()) - 1;
  if (n_ < 1 || m_.back() != 1) fail(ErrorCode::InvalidArgument, "minimal polynomial must be monic of degree >= 1");
  if (!is_irreducible_over_q(m_)) fail(ErrorCode::ReducibleModulus, "minimal polynomial is reducible over Q");
}

NFElem NumberField::from_rational(const Rational& v) const {
  Elem e = zero();
  e.c[0] = v;
  return e;
}

NFElem NumberField::gen() const {
  if (n_ == 1) return from_rational(-Rational(m_[0]));
  Elem e = zero();
  e.c[1] = 1;
  return e;
}

NFElem NumberField::from_coeffs(const std::vector<Rational>& coeffs) const {
  std::vector<Rational> t = coeffs;
  for (int i = static_cast<int>(t.size()) - 1; i >= n_; --i) {
    if (t[i] == 0) continue;
    Rational c = t[i];
    for (int j = 0; j < n_; ++j) t[i - n_ + j] -= c * m_[j];
    t[i] = 0;
  }
  Elem e = zero();
  for (int i = 0; i < n_ && i < static_cast<int>(t.size()); ++i) e.c[i] = t[i];
  return e;
}

NFElem NumberField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < n_; ++i) r.c[i] += b.c[i];
  return r;
}

NFElem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < n_; ++i) r.c[i] -= b.c[i];
  return r;
}

NFElem NumberField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

NFElem NumberField::mul(const Elem& a, const Elem& b) const {
  std::vector<Rational> t(2 * n_ - 1);
  for (int i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n_; ++j) t[i + j] += a.c[i] * b.c[j];
  }
  return from_coeffs(t);
}

bool NumberField::is_zero(const Elem& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

NFElem NumberField::inv(const Elem& a) const {
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero in a number field");
  // Extended Euclid: s*a + t*m = 1 since m is irreducible.
  const RationalField Q;
  QPoly r0 = to_qpoly(m_), r1(a.c.begin(), a.c.end());
  poly::trim(Q, r1);
  QPoly s0, s1{Rational(1)};
  while (poly::degree<RationalField>(r1) > 0) {
    auto [qt, rm] = poly::divmod(Q, r0, r1);
    QPoly s2 = poly::sub(Q, s0, poly::mul(Q, qt, s1));
    r0 = std::move(r1);
    r1 = std::move(rm);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant.
  QPoly s = poly::scale(Q, s1, Q.inv(r1[0]));
  return from_coeffs(s);
}

std::string NumberField::to_string(const Elem& a, const std::string& var) const {
  std::string out;
  for (int i = n_ - 1; i >= 0; --i) {
    const Rational& c = a.c[i];
    if (c == 0) continue;
    std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string coef;
    if (mon.empty()) coef = Rational(abs(c)).get_str();
    else if (abs(c) != 1) coef = Rational(abs(c)).get_str() + "*";
    if (out.empty()) out = (c < 0 ? "-" : "") + coef + mon;
    else out += (c < 0 ? " - " : " + ") + coef + mon;
  }
  return out.empty() ? "0" : out;
}

}  // namespace isoscope::arith
