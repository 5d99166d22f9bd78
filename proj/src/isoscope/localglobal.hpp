#pragma once

// Local-global scanning for l-isogenies: sampled local criteria, global root
// search, image certification, and the classification filters.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoscope/modpoly.hpp"

namespace isoscope::lg {

using arith::Integer;
using arith::Rational;

struct ScanConfig {
  int l = 7;
  int64_t d = 0;  // 0 for Q
  KValue j0 = Rational(0);
  uint64_t prime_bound = 10000;
  Integer height_bound = 1000;
  uint64_t seed = 0;
};

enum class Verdict { CandidateExceptional, NotExceptional, Inconclusive };
const char* to_string(Verdict v);

struct ScanReport {
  ScanConfig cfg;
  int primes_sampled = 0;
  int primes_skipped = 0;
  // Norms of sampled primes without a local l-isogeny (first few kept).
  int counterexamples = 0;
  std::vector<uint64_t> counterexample_norms;
  Rational local_success_fraction = 0;
  modpoly::RootSearch phi_root;
  std::optional<modpoly::RootSearch> fiber_root;
  bool global_root_found() const { return phi_root.found() || (fiber_root && fiber_root->found()); }
  // Primes (with squarefree specializations) where the fiber and classical
  // polynomials were compared for a linear factor, and disagreements.
  int fiber_compared = 0;
  int fiber_disagreements = 0;
  // Primes where the Frobenius criterion and a root of Phi_l were compared.
  int phi_compared = 0;
  int phi_disagreements = 0;
  modpoly::CycleProfile profile;
  std::vector<group::GroupLabel> image_candidates;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Modular polynomial cache keyed by l; built on first use.
const modpoly::IsogenyPolynomial& classical_polynomial(int l);

ScanReport scan(const ScanConfig& cfg);

/// Largest element order of the label (3, 4, 5) against (l-1)/(4e).
bool david_bound_filter(int l, const group::GroupLabel& label, int e);

/// For A4, S4, A5: the primes l (below `search_limit`) allowed by both the
/// Hasse congruence and the element-order bound at e = 2.
std::map<std::string, std::vector<int>> nondihedral_quadratic_classification(int search_limit = 1000);

struct Conj11Entry {
  std::string label;
  int64_t d = 0;
  KValue j0 = Rational(0);
};

struct Conj11Result {
  Conj11Entry entry;
  int primes = 0;
  int with_linear_factor = 0;
  double fraction() const { return primes ? static_cast<double>(with_linear_factor) / primes : 0.0; }
  modpoly::RootSearch global;
  bool density_one_like = false;   // fraction >= 0.95 over >= 100 primes
  bool conjecture_consistent = false;
  nlohmann::json to_json() const;
};

std::vector<Conj11Result> conjecture11_evidence(const std::vector<Conj11Entry>& js, uint64_t prime_bound,
                                                const Integer& height_bound = 1000);
/// {"entries": [{"label": ..., "field": "Q(sqrt(5))", "j": "1+r5"}, ...]}
std::vector<Conj11Entry> parse_conj11_file(const nlohmann::json& j);

/// Whether sqrt(l*) lies in Q(sqrt d), l* = (-1)^((l-1)/2) l.
bool sqrt_lstar_in_field(int l, int64_t d);

}  // namespace isoscope::lg
