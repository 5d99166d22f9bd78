#pragma once

// Integer and rational scalars plus word-sized modular helpers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace isoscope::arith {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_rational(const std::string& text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Exact square root of a rational, if it is the square of one.
std::optional<Rational> rational_sqrt(const Rational& x);
inline bool is_rational_square(const Rational& x) { return rational_sqrt(x).has_value(); }

std::optional<Integer> integer_sqrt_exact(const Integer& x);

// Height max(|num|, den).
Integer height(const Rational& x);

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + (m - b); }
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
// Inverse of a modulo m; a must be a unit.
uint64_t invmod(uint64_t a, uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);
// Rejects inputs above 64 bits.
bool is_prime(const Integer& n);
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Legendre symbol (a|p) for odd prime p, in {-1, 0, 1}.
int legendre(int64_t a, uint64_t p);
int legendre(const Integer& a, uint64_t p);
// Some r with r^2 = a mod p, when a is a square mod the odd prime p.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

bool is_squarefree(int64_t n);
// Squarefree part of n, keeping the sign.
int64_t squarefree_part(int64_t n);

// x mod p for x with denominator prime to p; nullopt otherwise.
std::optional<uint64_t> reduce_mod(const Rational& x, uint64_t p);
inline uint64_t reduce_mod(const Integer& x, uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

int64_t to_i64(const Integer& x);

}  // namespace isoscope::arith
