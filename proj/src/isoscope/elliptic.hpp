#pragma once

// Short Weierstrass curves y^2 = x^3 + a4 x + a6 over exact fields, reduction
// at primes of Q and Q(sqrt d), naive point counting, and the local
// l-isogeny criterion.

#include <cstdint>
#include <optional>

#include "isoscope/error.hpp"
#include "isoscope/field.hpp"
#include "isoscope/finite_field.hpp"
#include "isoscope/quadratic.hpp"

namespace isoscope::ec {

using arith::Field;

template <Field F>
struct ECShort {
  F field;
  typename F::Elem a4, a6;

  // 4 a4^3 + 27 a6^2 (the discriminant up to the factor -16).
  typename F::Elem disc_core() const {
    auto t = field.mul(field.from_int(4), field.mul(a4, field.mul(a4, a4)));
    return field.add(t, field.mul(field.from_int(27), field.mul(a6, a6)));
  }
  typename F::Elem discriminant() const { return field.mul(field.from_int(-16), disc_core()); }
  typename F::Elem j_invariant() const {
    auto c = field.mul(field.from_int(4), field.mul(a4, field.mul(a4, a4)));
    return field.div(field.mul(field.from_int(1728), c), disc_core());
  }
};

template <Field F>
ECShort<F> make_curve(const F& f, typename F::Elem a4, typename F::Elem a6) {
  ECShort<F> E{f, std::move(a4), std::move(a6)};
  if (f.is_zero(E.disc_core())) fail(ErrorCode::InvalidArgument, "singular Weierstrass equation");
  return E;
}

/// a4 = 3j(1728 - j), a6 = 2j(1728 - j)^2.
template <Field F>
ECShort<F> curve_from_j(const F& f, const typename F::Elem& j) {
  const int64_t ch = f.characteristic();
  if (ch == 2 || ch == 3) fail(ErrorCode::BadCharacteristic, "characteristic 2 or 3 is not supported");
  if (f.is_zero(j) || f.equal(j, f.from_int(1728))) fail(ErrorCode::SpecialJ, "j = 0 and j = 1728 are excluded");
  auto k = f.sub(f.from_int(1728), j);
  auto a4 = f.mul(f.from_int(3), f.mul(j, k));
  auto a6 = f.mul(f.from_int(2), f.mul(j, f.mul(k, k)));
  return ECShort<F>{f, a4, a6};
}

struct FrobeniusData {
  uint64_t q = 0;
  int64_t a = 0;
};

inline constexpr uint64_t kMaxCountField = 1000000;

/// #E(F_q) by enumerating x; a = q + 1 - #E.
FrobeniusData point_count(const ECShort<arith::FiniteField>& E);

/// x^2 - a x + q has a root mod l, i.e. a^2 - 4q is a square (or zero) mod l.
bool local_isogeny_exists(const FrobeniusData& fr, uint64_t l);

enum class PrimeKind { Rational, Split, Inert, Ramified };

/// A prime of Q (d = 0) or of Q(sqrt d). For split primes `root` selects
/// the ideal (p, sqrt d - root).
struct PrimeOfK {
  int64_t d = 0;
  uint64_t p = 0;
  PrimeKind kind = PrimeKind::Rational;
  uint64_t root = 0;

  uint64_t norm() const { return kind == PrimeKind::Inert ? p * p : p; }
  arith::FiniteField residue_field() const;
};

/// The primes of Q(sqrt d) above p (one or two); d = 0 means Q.
std::vector<PrimeOfK> primes_above(int64_t d, uint64_t p);

/// Image of a rational or quadratic number in the residue field; throws
/// NotIntegral when a denominator is divisible by p.
arith::FFElem reduce(const arith::Rational& x, const PrimeOfK& P, const arith::FiniteField& F);
arith::FFElem reduce(const arith::QuadElem& x, const PrimeOfK& P, const arith::FiniteField& F);

/// Reduction of E modulo P; BadReduction when the reduced discriminant vanishes.
template <class F>
ECShort<arith::FiniteField> reduce_at(const ECShort<F>& E, const PrimeOfK& P) {
  if (P.p == 2 || P.p == 3) fail(ErrorCode::BadCharacteristic, "residue characteristic 2 or 3");
  arith::FiniteField Fq = P.residue_field();
  ECShort<arith::FiniteField> R{Fq, reduce(E.a4, P, Fq), reduce(E.a6, P, Fq)};
  if (Fq.is_zero(R.disc_core())) fail(ErrorCode::BadReduction, "bad reduction at p = " + std::to_string(P.p));
  return R;
}

}  // namespace isoscope::ec
