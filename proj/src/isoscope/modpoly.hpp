#pragma once

// Classical modular polynomials, the explicit Hauptmodul fiber polynomials,
// Frobenius cycle statistics and exact root search.

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "isoscope/bipoly.hpp"
#include "isoscope/factor.hpp"
#include "isoscope/kvalue.hpp"
#include "isoscope/projgroup.hpp"

namespace isoscope::modpoly {

using arith::BiPoly;

struct IsogenyPolynomial {
  enum class Kind { Classical, HauptmodulFiber };
  int l = 0;
  BiPoly poly;
  Kind kind = Kind::Classical;
};

/// Phi_l for l in {2, 3, 5, 7, 11, 13} from the q-expansion of j.
IsogenyPolynomial compute_phi(int l);
/// Phi_l(j(q), j(q^l)) == 0 through q^N.
bool verify_phi(const IsogenyPolynomial& P, int N);
/// Phi_l == (X^l - Y)(X - Y^l) mod l, term by term.
bool kronecker_congruence(const IsogenyPolynomial& P);

/// (X^2+5X+13)(X^4+7X^3+20X^2+19X+1)^3 - XY.
IsogenyPolynomial f13_polynomial();
/// (X^2+250X+3125)^3 - Y X^5.
IsogenyPolynomial f5_polynomial();
/// The fiber polynomial for l when one is printed, else nullopt.
std::optional<IsogenyPolynomial> fiber_polynomial(int l);

/// P(X, j0) over the residue field of j0.
arith::FFPoly specialize_mod_p(const IsogenyPolynomial& P, const arith::FiniteField& F, const arith::FFElem& j0);

enum class PrimeFilter { All, SquareDeterminant, NonSquareDeterminant };

struct CycleProfile {
  int l = 0;
  int samples = 0;
  int skipped = 0;
  std::map<std::vector<int>, int> histogram;

  std::vector<std::vector<int>> support() const;
  nlohmann::json to_json() const;
};

/// Factor shapes of P(X, j0 mod P) over good primes P of the field of j0 with
/// norm <= prime_bound. Primes above 2, 3, l, ramified primes, primes where
/// j0 is not integral or reduces to 0 or 1728, and non-squarefree
/// specializations are skipped and counted.
CycleProfile cycle_profile(const IsogenyPolynomial& P, const KValue& j0, uint64_t prime_bound,
                           PrimeFilter filter = PrimeFilter::All);

struct CandidateOptions {
  // Drop subgroups with a point of P^1 fixed by the whole group.
  bool require_no_fixed_point = false;
  int min_samples = 50;
};

/// Minimal (under inclusion) subgroups of PGL_2(F_l), among cyclic, dihedral,
/// A4, S4, A5, Borel, PSL and PGL, whose element cycle types cover the
/// observed support.
std::vector<group::GroupLabel> image_candidates(const CycleProfile& profile, const CandidateOptions& opts = {});

struct RootSearch {
  std::vector<KValue> roots;  // exact, verified
  arith::Integer height_bound;
  bool found() const { return !roots.empty(); }
  nlohmann::json to_json() const;
};

/// Roots x0 in K of P(X, j0) whose coordinates (a, b in x0 = a + b sqrt d)
/// have height <= height_bound; every reported root is checked exactly.
RootSearch root_in_field(const IsogenyPolynomial& P, const KValue& j0, const arith::Integer& height_bound);

}  // namespace isoscope::modpoly
