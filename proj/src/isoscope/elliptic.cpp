#include "isoscope/elliptic.hpp"

#include <cmath>

namespace isoscope::ec {

using arith::FFElem;
using arith::FiniteField;

FrobeniusData point_count(const ECShort<FiniteField>& E) {
  const FiniteField& F = E.field;
  if (F.p() < 5) fail(ErrorCode::BadCharacteristic, "point counting needs p >= 5");
  uint64_t q;
  try {
    q = F.size();
  } catch (const Error&) {
    fail(ErrorCode::FieldTooLarge, "field too large for naive point counting");
  }
  if (q > kMaxCountField) fail(ErrorCode::FieldTooLarge, "q = " + std::to_string(q) + " exceeds naive counting regime");

  int64_t n = 1;  // point at infinity
  if (F.degree() == 1) {
    const uint64_t p = F.p();
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y <= p / 2; ++y) chi[y * y % p] = 1;
    const uint64_t a = E.a4.c[0], b = E.a6.c[0];
    for (uint64_t x = 0; x < p; ++x) {
      uint64_t v = (arith::mulmod(arith::mulmod(x, x, p) + a, x, p) + b) % p;
      n += 1 + chi[v];
    }
  } else {
    for (uint64_t i = 0; i < q; ++i) {
      FFElem x = F.element(i);
      FFElem v = F.add(F.mul(F.add(F.mul(x, x), E.a4), x), E.a6);
      if (F.is_zero(v)) n += 1;
      else if (F.is_square(v)) n += 2;
    }
  }
  FrobeniusData fr{q, static_cast<int64_t>(q) + 1 - n};
  if (static_cast<double>(fr.a) * fr.a > 4.0 * static_cast<double>(q))
    fail(ErrorCode::InvalidArgument, "Hasse bound violated; point count is wrong");
  return fr;
}

bool local_isogeny_exists(const FrobeniusData& fr, uint64_t l) {
  if (fr.q % l == 0) fail(ErrorCode::ResidueCharacteristic, "l divides q");
  const int64_t L = static_cast<int64_t>(l);
  int64_t a = fr.a % L;
  int64_t q = static_cast<int64_t>(fr.q % l);
  int64_t disc = ((a * a - 4 * q) % L + L) % L;
  return arith::legendre(disc, l) >= 0;
}

FiniteField PrimeOfK::residue_field() const {
  if (kind == PrimeKind::Inert) {
    uint64_t md = static_cast<uint64_t>(((-d) % static_cast<int64_t>(p) + static_cast<int64_t>(p)) % static_cast<int64_t>(p));
    return FiniteField::with_modulus(p, {md, 0, 1});
  }
  return FiniteField::make(p, 1);
}

std::vector<PrimeOfK> primes_above(int64_t d, uint64_t p) {
  if (!arith::is_prime_u64(p)) fail(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  if (d == 0) return {PrimeOfK{0, p, PrimeKind::Rational, 0}};
  if (p == 2) fail(ErrorCode::BadCharacteristic, "primes above 2 are not modelled");
  int s = arith::legendre(d, p);
  if (s == 0) return {PrimeOfK{d, p, PrimeKind::Ramified, 0}};
  if (s < 0) return {PrimeOfK{d, p, PrimeKind::Inert, 0}};
  uint64_t dm = static_cast<uint64_t>((d % static_cast<int64_t>(p) + static_cast<int64_t>(p)) % static_cast<int64_t>(p));
  uint64_t r = *arith::sqrt_mod(dm, p);
  return {PrimeOfK{d, p, PrimeKind::Split, r}, PrimeOfK{d, p, PrimeKind::Split, p - r}};
}

FFElem reduce(const arith::Rational& x, const PrimeOfK& P, const FiniteField& F) {
  auto r = arith::reduce_mod(x, P.p);
  if (!r) fail(ErrorCode::NotIntegral, "denominator divisible by " + std::to_string(P.p));
  return F.from_u64(*r);
}

FFElem reduce(const arith::QuadElem& x, const PrimeOfK& P, const FiniteField& F) {
  if (P.kind != PrimeKind::Rational && x.d() != P.d)
    fail(ErrorCode::InvalidArgument, "element and prime belong to different quadratic fields");
  FFElem a = reduce(x.a(), P, F);
  if (x.b() == 0) return a;
  FFElem b = reduce(x.b(), P, F);
  switch (P.kind) {
    case PrimeKind::Rational: fail(ErrorCode::InvalidArgument, "irrational element at a prime of Q");
    case PrimeKind::Split: return F.add(a, F.mul(b, F.from_u64(P.root)));
    case PrimeKind::Ramified: return a;  // sqrt d lies in the prime
    case PrimeKind::Inert: return F.add(a, F.mul(b, F.gen()));
  }
  return a;
}

}  // namespace isoscope::ec
