#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "isoscope/field.hpp"

namespace isoscope::arith {

inline constexpr int kMaxExtensionDegree = 12;

/// Element of F_{p^k} as k coefficient residues (polynomial basis, low degree
/// first). Unused slots stay zero so equality is plain array comparison.
struct FFElem {
  std::array<uint64_t, kMaxExtensionDegree> c{};
  friend bool operator==(const FFElem&, const FFElem&) = default;
};

/// F_{p^k} = F_p[x]/(m(x)). Cheap to copy; the modulus is verified
/// irreducible on construction.
class FiniteField {
 public:
  using Elem = FFElem;

  /// Canonical field: for k >= 2 the modulus is the first monic irreducible
  /// in lexicographic order of (c_{k-1}, ..., c_0); for k = 1 it is x.
  static FiniteField make(uint64_t p, int k);
  /// Field with a caller-chosen monic modulus (coefficients low to high,
  /// size k+1).
  static FiniteField with_modulus(uint64_t p, std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  int degree() const { return k_; }
  // Field size q = p^k; throws FieldTooLarge when it does not fit 64 bits.
  uint64_t size() const;
  const std::vector<uint64_t>& modulus() const { return modulus_; }
  int64_t characteristic() const { return static_cast<int64_t>(p_); }

  Elem zero() const { return Elem{}; }
  Elem one() const {
    Elem e;
    e.c[0] = 1 % p_;
    return e;
  }
  Elem from_int(int64_t n) const;
  Elem from_u64(uint64_t n) const {
    Elem e;
    e.c[0] = n % p_;
    return e;
  }
  Elem from_integer(const Integer& n) const { return from_u64(reduce_mod(n, p_)); }
  // The generator x of the polynomial basis (requires k >= 2).
  Elem gen() const;
  Elem from_coeffs(const std::vector<uint64_t>& coeffs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, uint64_t e) const { return field_pow(*this, a, e); }
  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem frobenius(const Elem& a) const { return pow(a, p_); }
  // x -> x^(1/p), the inverse Frobenius.
  Elem pth_root(const Elem& a) const;
  bool is_square(const Elem& a) const;

  // Bijection {0..q-1} -> field, base-p digits as coefficients.
  Elem element(uint64_t index) const;
  uint64_t index_of(const Elem& a) const;

  std::string to_string(const Elem& a) const;

 private:
  FiniteField(uint64_t p, int k, std::vector<uint64_t> modulus);

  uint64_t p_;
  int k_;
  std::vector<uint64_t> modulus_;
};

/// Rabin irreducibility test for a monic polynomial over F_p (low to high).
bool is_irreducible_mod_p(const std::vector<uint64_t>& monic, uint64_t p);

}  // namespace isoscope::arith
