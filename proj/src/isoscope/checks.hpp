#pragma once

// Named end-to-end checks shared by the command line and the acceptance
// runner. Each returns pass/fail plus a JSON detail record.

#include <string>
#include <vector>

#include <json.hpp>

#include "isoscope/localglobal.hpp"

namespace isoscope::checks {

struct Check {
  std::string name;
  bool pass = false;
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();
  double seconds = 0;
  nlohmann::json to_json() const;
};

/// l = 7, j = 2268945/128 over Q: local fraction 1 over >= 1200 primes, no
/// global root, CandidateExceptional.
Check sutherland_pair(uint64_t prime_bound = 10000);
/// X_split(5) family over Q(sqrt 5) at l = 5: the worked example and `count`
/// seeded exceptional s, then s = 6 and `count` seeded s = t + 5/t.
Check xsplit5_family(uint64_t prime_bound = 10000, int count = 20, uint64_t seed = 1);
/// Hasse property against the congruence prediction on constructed subgroups.
Check hasse_vs_congruence(uint64_t seed = 1);
/// Points, cusps, j-zeros and smoothness of the X_S4(13) quartic.
Check xs413_models();
/// Phi_l for l in {2,3,5,7,11} (and 13 when asked), plus Phi_13 vs F_13
/// factor shapes on `pairs` random (j0, p).
Check modular_polynomials(bool with13 = true, int pairs = 50, uint64_t seed = 1);
/// Frobenius cycle types for the S4/A4 curves at 13.
Check s4_curves_at_13(uint64_t prime_bound = 3000);
/// The six-subgroup permutation character identity in GL_2(F_13).
Check brauer();
/// Parity, orbit-count formula and Mackey checks on PGL_2 subgroups.
Check group_suite(uint64_t seed = 1);
/// X_split(11) search and the Phi_11 linear-factor harness.
Check xsplit11_harness(const std::vector<lg::Conj11Entry>& js, uint64_t prime_bound = 3000);
/// The X_split(5) / Klein-Maier Hauptmodul identity.
Check hauptmodul();

}  // namespace isoscope::checks
