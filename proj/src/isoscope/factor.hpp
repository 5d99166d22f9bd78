#pragma once

// Factorization shapes over finite fields: squarefree decomposition followed
// by distinct-degree factorization. Only degrees are produced; equal-degree
// splitting is never needed.

#include <algorithm>
#include <utility>
#include <vector>

#include "isoscope/finite_field.hpp"
#include "isoscope/upoly.hpp"

namespace isoscope::arith {

using FFPoly = Poly<FiniteField>;

namespace detail {

// g(x) with g(x)^p = f(x), for f with f' = 0.
inline FFPoly poly_pth_root(const FiniteField& F, const FFPoly& f) {
  const auto p = F.p();
  FFPoly r((f.size() - 1) / p + 1, F.zero());
  for (size_t i = 0; i < f.size(); i += p) r[i / p] = F.pth_root(f[i]);
  poly::trim(F, r);
  return r;
}

inline void squarefree_rec(const FiniteField& F, FFPoly f, int mult, std::vector<std::pair<FFPoly, int>>& out) {
  FFPoly c = poly::gcd(F, f, poly::derivative(F, f));
  FFPoly w = poly::divmod(F, f, c).first;
  int i = 1;
  while (poly::degree<FiniteField>(w) > 0) {
    FFPoly y = poly::gcd(F, w, c);
    FFPoly z = poly::divmod(F, w, y).first;
    if (poly::degree<FiniteField>(z) > 0) out.emplace_back(poly::monic(F, z), i * mult);
    ++i;
    w = std::move(y);
    c = poly::divmod(F, c, w).first;
  }
  if (poly::degree<FiniteField>(c) > 0)
    squarefree_rec(F, poly_pth_root(F, c), mult * static_cast<int>(F.p()), out);
}

}  // namespace detail

/// Pairs (g_i, e_i) with f = lc * prod g_i^{e_i}, each g_i monic squarefree
/// and pairwise coprime.
inline std::vector<std::pair<FFPoly, int>> squarefree_decomposition(const FiniteField& F, const FFPoly& f) {
  if (f.empty()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<FFPoly, int>> out;
  detail::squarefree_rec(F, poly::monic(F, f), 1, out);
  return out;
}

/// Degrees of the irreducible factors of a squarefree polynomial.
inline std::vector<int> distinct_degree_shape(const FiniteField& F, FFPoly g) {
  std::vector<int> degs;
  g = poly::monic(F, g);
  const FFPoly x = poly::x(F);
  FFPoly h = poly::rem(F, x, g);
  const uint64_t q = F.size();
  for (int d = 1; 2 * d <= poly::degree<FiniteField>(g); ++d) {
    h = poly::powmod(F, h, q, g);
    FFPoly fac = poly::gcd(F, g, poly::sub(F, h, x));
    int fd = poly::degree<FiniteField>(fac);
    if (fd > 0) {
      for (int k = 0; k < fd / d; ++k) degs.push_back(d);
      g = poly::divmod(F, g, fac).first;
      h = poly::rem(F, h, g);
    }
  }
  if (poly::degree<FiniteField>(g) > 0) degs.push_back(poly::degree<FiniteField>(g));
  return degs;
}

/// Multiset (sorted) of degrees of irreducible factors, with multiplicity.
inline std::vector<int> poly_degree_multiset(const FiniteField& F, const FFPoly& f) {
  std::vector<int> out;
  for (const auto& [g, e] : squarefree_decomposition(F, f))
    for (int d : distinct_degree_shape(F, g))
      for (int k = 0; k < e; ++k) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_squarefree_poly(const FiniteField& F, const FFPoly& f) {
  return poly::degree<FiniteField>(poly::gcd(F, f, poly::derivative(F, f))) == 0;
}

/// Whether f has a root in F (gcd with x^q - x).
inline bool has_root(const FiniteField& F, const FFPoly& f) {
  if (f.empty()) return true;
  if (poly::degree<FiniteField>(f) == 0) return false;
  const FFPoly x = poly::x(F);
  FFPoly h = poly::powmod(F, x, F.size(), f);
  return poly::degree<FiniteField>(poly::gcd(F, f, poly::sub(F, h, x))) > 0;
}

}  // namespace isoscope::arith
