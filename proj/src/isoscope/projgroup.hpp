#pragma once

// PGL_2(F_l) and its subgroups acting on P^1(F_l).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace isoscope::group {

/// Projective class of an invertible 2x2 matrix over F_l, stored with the
/// first nonzero entry (row-major) equal to 1.
struct ProjMat {
  int l = 0;
  std::array<int, 4> m{};  // a b / c d

  /// Normalizes; throws InvalidArgument on a singular matrix or bad l.
  static ProjMat make(int l, int64_t a, int64_t b, int64_t c, int64_t d);
  static ProjMat identity(int l) { return make(l, 1, 0, 0, 1); }

  uint64_t key() const;
  int det() const;            // of the normalized representative
  bool det_is_square() const;  // well defined on the projective class
  int trace() const;
  // Discriminant tr^2 - 4 det of the normalized representative.
  int disc() const;
  bool is_identity() const { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

  friend bool operator==(const ProjMat& x, const ProjMat& y) { return x.l == y.l && x.m == y.m; }
  friend ProjMat operator*(const ProjMat& x, const ProjMat& y);
  ProjMat inverse() const;
  ProjMat pow(uint64_t e) const;
  int order() const;
};

/// Points of P^1(F_l): x in [0, l) is (x : 1), and l is (1 : 0).
using ProjPoint = int;

int act(const ProjMat& g, ProjPoint p);
std::vector<int> permutation(const ProjMat& g);
// Sorted cycle lengths of g on P^1(F_l).
std::vector<int> cycle_type(const ProjMat& g);
int fixed_point_count(const ProjMat& g);
// Diagonalizable over F_l with distinct eigenvalues, or the identity.
bool is_split_element(const ProjMat& g);

struct GroupLabel {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5, ContainsPSL, Other };
  Kind kind = Kind::Other;
  int order = 0;  // group order (Cyclic(n): n; Dihedral(2n): 2n)

  static GroupLabel cyclic(int n) { return {Kind::Cyclic, n}; }
  static GroupLabel dihedral(int order) { return {Kind::Dihedral, order}; }
  static GroupLabel a4() { return {Kind::A4, 12}; }
  static GroupLabel s4() { return {Kind::S4, 24}; }
  static GroupLabel a5() { return {Kind::A5, 60}; }
  static GroupLabel parse(const std::string& s);
  std::string to_string() const;
  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
  friend auto operator<=>(const GroupLabel&, const GroupLabel&) = default;
};

class ProjSubgroup {
 public:
  int l() const { return l_; }
  size_t order() const { return elements_.size(); }
  const std::vector<ProjMat>& generators() const { return gens_; }
  const std::vector<ProjMat>& elements() const { return elements_; }
  bool contains(const ProjMat& g) const { return index_.count(g.key()) > 0; }

  nlohmann::json to_json(const std::string& label) const;

 private:
  friend std::optional<ProjSubgroup> try_closure(int, const std::vector<ProjMat>&, size_t);
  int l_ = 0;
  std::vector<ProjMat> gens_;
  std::vector<ProjMat> elements_;
  std::unordered_map<uint64_t, size_t> index_;
};

/// Breadth-first closure; nullopt once more than `bound` elements appear.
std::optional<ProjSubgroup> try_closure(int l, const std::vector<ProjMat>& gens, size_t bound);
/// As try_closure, but throws BoundExceeded.
ProjSubgroup closure(int l, const std::vector<ProjMat>& gens, size_t bound);

uint64_t pgl2_order(int l);
std::vector<ProjMat> all_elements(int l, bool psl_only);

ProjSubgroup pgl2(int l);
ProjSubgroup psl2(int l);
ProjSubgroup split_cartan_normalizer(int l);
ProjSubgroup nonsplit_cartan(int l);
ProjSubgroup borel(int l);

bool is_psl(const ProjSubgroup& H);
bool is_hasse(const ProjSubgroup& H);
bool is_abelian(const ProjSubgroup& H);
std::map<int, int> order_profile(const ProjSubgroup& H);
GroupLabel classify(const ProjSubgroup& H);
bool is_in_split_cartan_normalizer_class(const ProjSubgroup& H);
bool congruence_prediction(const GroupLabel& target, int l, bool split);
int orbit_count(const ProjSubgroup& H);
std::vector<int> orbit_sizes(const ProjSubgroup& H);
bool mackey_check(const ProjSubgroup& H);

/// Distinct cycle types (sorted lists) of the elements of H on P^1(F_l).
std::vector<std::vector<int>> cycle_type_set(const ProjSubgroup& H);

struct SearchOptions {
  bool psl_only = true;
  // For dihedral targets: require the cyclic part to be split (true) or
  // non-split (false); unset accepts either.
  std::optional<bool> split;
};

/// Randomized search for a subgroup of the given isomorphism type. Throws
/// NotFound when `budget` attempts fail.
ProjSubgroup find_subgroup(int l, const GroupLabel& target, uint64_t seed, int budget,
                           const SearchOptions& opts = {});

ProjSubgroup subgroup_from_json(const nlohmann::json& j, std::string* label = nullptr);

}  // namespace isoscope::group
