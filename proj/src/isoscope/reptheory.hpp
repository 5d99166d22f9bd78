#pragma once

// Permutation characters of GL_2(F_l) on coset spaces, and the six-subgroup
// character identity at l = 13.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace isoscope::rep {

/// GL_2(F_l) with every element enumerated; elements are indices into a
/// fixed list, matrices are encoded a + l b + l^2 c + l^3 d.
class MatGroup {
 public:
  explicit MatGroup(int l = 13);

  int l() const { return l_; }
  size_t order() const { return elems_.size(); }
  uint32_t encode(int a, int b, int c, int d) const;
  std::array<int, 4> decode(uint32_t code) const;
  // Index of a matrix code, or -1 when singular.
  int index_of(uint32_t code) const { return index_[code]; }
  uint32_t code(int i) const { return elems_[i]; }

  int mul(int i, int j) const;
  int inv(int i) const { return inv_[i]; }
  int conj(int g, int x) const { return mul(inv(x), mul(g, x)); }  // x^-1 g x
  int identity() const { return id_; }
  std::string to_string(int i) const;

 private:
  int l_;
  std::vector<uint32_t> elems_;
  std::vector<int> index_;
  std::vector<int> inv_;
  int id_ = 0;
};

struct ConjugacyClasses {
  std::vector<int> reps;
  std::vector<size_t> sizes;
  std::vector<int> class_of;  // per element index
};

ConjugacyClasses conjugacy_classes(const MatGroup& G);

/// Closed subgroup of a MatGroup, as a membership mask.
struct SubgroupGL2 {
  std::string name;
  std::vector<int> generators;
  std::vector<int> elements;
  std::vector<bool> member;
  size_t order() const { return elements.size(); }
};

SubgroupGL2 closure(const MatGroup& G, const std::string& name, const std::vector<int>& gens);

/// The six pullbacks (from PGL_2(F_13)) entering the relation, in the order
/// C_s+, pi^-1(C13:C3), pi^-1(C13:C4), pi^-1(S4), pi^-1(D26), B.
std::vector<SubgroupGL2> standard_subgroups(const MatGroup& G);
/// pi^-1(A4), the subgroup used to build pi^-1(S4).
SubgroupGL2 a4_pullback(const MatGroup& G);

/// chi_{G/H}(rep) = |{x in G : x^-1 rep x in H}| / |H| for each class.
std::vector<int64_t> perm_character(const MatGroup& G, const ConjugacyClasses& cls, const SubgroupGL2& H);

struct BrauerReport {
  bool holds = false;
  std::vector<std::vector<int64_t>> characters;  // per subgroup, per class
  std::vector<std::string> names;
  std::vector<size_t> orders;
  int first_failing_class = -1;
};

/// 2 chi(C_s+) + chi(C13:C3) + chi(C13:C4) == 2 chi(S4) + chi(D26) + chi(B)
/// classwise. With `a4_instead` the S4 pullback is replaced by the A4 one.
BrauerReport verify_brauer_relation(const MatGroup& G, const ConjugacyClasses& cls, bool a4_instead = false);
BrauerReport verify_brauer_relation(bool a4_instead = false);

/// Rows = classes (representative, size), columns = the six characters.
std::string brauer_csv(const MatGroup& G, const ConjugacyClasses& cls, const BrauerReport& r);

}  // namespace isoscope::rep
