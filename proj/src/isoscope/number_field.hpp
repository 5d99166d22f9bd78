#pragma once

#include <memory>
#include <string>
#include <vector>

#include "isoscope/field.hpp"
#include "isoscope/integer.hpp"

namespace isoscope::arith {

/// Residue representative c_0 + c_1 a + ... + c_{n-1} a^{n-1} in Q[x]/(m).
struct NFElem {
  std::vector<Rational> c;
  friend bool operator==(const NFElem&, const NFElem&) = default;
};

/// Q(a) = Q[x]/(m(x)) for a monic irreducible integer polynomial m.
class NumberField {
 public:
  using Elem = NFElem;

  /// Coefficients low to high; checks monicity and irreducibility once.
  explicit NumberField(std::vector<Integer> min_poly);

  int degree() const { return n_; }
  const std::vector<Integer>& min_poly() const { return m_; }

  Elem zero() const { return Elem{std::vector<Rational>(n_)}; }
  Elem one() const { return from_rational(1); }
  Elem from_int(int64_t v) const { return from_rational(Rational(Integer(static_cast<long>(v)))); }
  Elem from_integer(const Integer& v) const { return from_rational(Rational(v)); }
  Elem from_rational(const Rational& v) const;
  // The class of x.
  Elem gen() const;
  // Element sum coeffs[i] a^i for any number of coefficients (reduced).
  Elem from_coeffs(const std::vector<Rational>& coeffs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int64_t characteristic() const { return 0; }

  std::string to_string(const Elem& a, const std::string& var = "a") const;

 private:
  int n_;
  std::vector<Integer> m_;
};

/// Irreducibility over Q of a monic integer polynomial: rational-root scan,
/// factor-degree patterns modulo small primes, and, when those leave room for
/// a factorization, a numeric search for integer factors that is confirmed by
/// exact division.
bool is_irreducible_over_q(const std::vector<Integer>& monic);

}  // namespace isoscope::arith
