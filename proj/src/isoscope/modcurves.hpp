#pragma once

// Explicit models: the X_split(5) parametrization, the plane quartic model
// of X_S4(13) with its cusps and j-zeros, and the sextic model of
// X_split(11).

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoscope/finite_field.hpp"
#include "isoscope/kvalue.hpp"
#include "isoscope/upoly.hpp"

namespace isoscope::curves {

using arith::Integer;
using arith::QuadElem;
using arith::Rational;

/// Homogeneous form in X, Y, Z with integer coefficients, keyed by exponent
/// triple (lex order).
struct TernaryForm {
  using Exps = std::array<int, 3>;
  std::map<Exps, Integer> terms;

  void add_term(int i, int j, int k, const Integer& c);
  int degree() const;
  bool is_homogeneous() const;
  TernaryForm partial(int var) const;

  template <class F>
  typename F::Elem eval(const F& f, const typename F::Elem& x, const typename F::Elem& y,
                        const typename F::Elem& z) const {
    typename F::Elem acc = f.zero();
    for (const auto& [e, c] : terms) {
      auto t = f.from_integer(c);
      for (int n = 0; n < e[0]; ++n) t = f.mul(t, x);
      for (int n = 0; n < e[1]; ++n) t = f.mul(t, y);
      for (int n = 0; n < e[2]; ++n) t = f.mul(t, z);
      acc = f.add(acc, t);
    }
    return acc;
  }
};

// ---- X_split(5) -----------------------------------------------------------

/// ((s+5)(s^2-5)(s^2+5s+10))^3 / (s^2+5s+5)^5 in Q(sqrt 5).
QuadElem xsplit5_j(const QuadElem& s);
/// sigma(s) = ((sqrt5 - 5)s - 20)/(2s + 5 + sqrt5).
QuadElem xsplit5_sigma(const QuadElem& s);
/// {s, sigma(s), sigma^2(s)}.
std::array<QuadElem, 3> xsplit5_conjugates(const QuadElem& s);

enum class Xsplit5Verdict { Exceptional, HasGlobalIsogeny, Pole };
const char* to_string(Xsplit5Verdict v);

struct Xsplit5Report {
  Xsplit5Verdict verdict;
  std::vector<QuadElem> orbit;
  // Orbit members s' with s'^2 - 20 a square (rational t-preimage).
  std::vector<QuadElem> square_witnesses;
  nlohmann::json to_json() const;
};

Xsplit5Report xsplit5_is_exceptional(const QuadElem& s);

struct IdentityCheck {
  bool rational_identity = false;
  bool series_identity = false;
  bool ok() const { return rational_identity && series_identity; }
};

/// Substituting s = t + 5/t into the X_split(5) j-map against Klein's
/// (t5^2 + 250 t5 + 3125)^3 / t5^5 with t5 = t(t^4 + 5t^3 + 15t^2 + 25t + 25).
/// `middle_constant` is the 10 in s^2 + 5s + 10 (exposed for fault checks).
IdentityCheck hauptmodul_identity_check(int N = 30, int middle_constant = 10);

// ---- X_S4(13) -------------------------------------------------------------

TernaryForm xs413_curve();
TernaryForm xs413_cusp_cubic();

template <class F>
bool xs413_contains(const F& f, const typename F::Elem& x, const typename F::Elem& y, const typename F::Elem& z) {
  if (f.is_zero(x) && f.is_zero(y) && f.is_zero(z)) fail(ErrorCode::ZeroPoint, "(0:0:0) is not a projective point");
  return f.is_zero(xs413_curve().eval(f, x, y, z));
}

struct CheckResult {
  std::string check;
  bool pass = false;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json to_json() const;
};

/// The six listed points over Q(sqrt 13).
CheckResult xs413_verify_points();
CheckResult xs413_verify_cusps();
CheckResult xs413_verify_zeros();

/// True iff F and its partials mod p have no common zero over the algebraic
/// closure of F_p (so the reduction is smooth).
bool quartic_smooth_mod_p(const TernaryForm& F, uint64_t p);
bool xs413_smooth(uint64_t p);

// ---- X_split(11) ----------------------------------------------------------

/// 4X^6 - 4X^4 - 2X^3 + 2X^2 + 3/2 X + 1/4, low degree first.
std::vector<Rational> xsplit11_sextic();

struct SextPoint {
  KValue x, y;
};

/// Points (x, y) on y^2 = f(x) with x = (a + b sqrt d)/c, |a|, |b|, c <= height
/// (b = 0 only when d = 1). Order: by max(|a|, |b|, c), then a, b, c.
std::vector<SextPoint> xsplit11_search(int64_t d, int height);

}  // namespace isoscope::curves
