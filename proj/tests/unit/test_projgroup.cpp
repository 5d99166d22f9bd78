#include <doctest.h>

#include <map>
#include <set>

#include "isoscope/error.hpp"
#include "isoscope/projgroup.hpp"

using namespace isoscope;
using namespace isoscope::group;

namespace {

ProjMat M(int l, int a, int b, int c, int d) { return ProjMat::make(l, a, b, c, d); }

ProjSubgroup a4_at_13() { return closure(13, {M(13, -5, 0, 0, 5), M(13, -2, -2, -3, 3)}, 2184); }

// Permutation sign from the inversion count (independent of cycle counting).
int inversion_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("projective normalization and action") {
  auto g = M(13, 2, 4, 6, 10);
  CHECK(g.m[0] == 1);
  CHECK(g == M(13, 1, 2, 3, 5));
  CHECK_THROWS_AS(M(13, 1, 2, 2, 4), Error);

  auto id = ProjMat::identity(13);
  for (int p = 0; p <= 13; ++p) CHECK(act(id, p) == p);
  auto d = M(13, -5, 0, 0, 5);
  CHECK(act(d, 0) == 0);
  CHECK(act(d, 13) == 13);
  auto t = M(13, 1, 1, 0, 1);
  std::vector<int> fixed;
  for (int p = 0; p <= 13; ++p)
    if (act(t, p) == p) fixed.push_back(p);
  CHECK(fixed == std::vector<int>{13});
  // Bijectivity.
  for (const auto& h : all_elements(7, false)) {
    auto perm = permutation(h);
    CHECK(std::set<int>(perm.begin(), perm.end()).size() == 8);
  }
}

TEST_CASE("closure examples") {
  auto triv = closure(13, {}, 10);
  CHECK(triv.order() == 1);
  auto A = a4_at_13();
  CHECK(A.order() == 12);
  CHECK(order_profile(A) == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}});
  auto D = closure(13, {M(13, 1, 1, 0, 1), M(13, -1, 0, 0, 1)}, 2184);
  CHECK(D.order() == 26);
  CHECK_THROWS_AS(closure(13, {M(13, 1, 1, 0, 1), M(13, 1, 0, 1, 1)}, 100), Error);
}

TEST_CASE("orders of the standard groups") {
  for (int l : {5, 7, 11, 13}) {
    CHECK(pgl2(l).order() == static_cast<size_t>(l * (l - 1) * (l + 1)));
    CHECK(psl2(l).order() == static_cast<size_t>(l * (l - 1) * (l + 1) / 2));
    CHECK(all_elements(l, false).size() == pgl2_order(l));
  }
  CHECK(split_cartan_normalizer(5).order() == 8);
  CHECK(nonsplit_cartan(13).order() == 14);
  CHECK(borel(13).order() == 156);
}

TEST_CASE("is_psl") {
  CHECK(is_psl(closure(13, {}, 1)));
  CHECK_FALSE(is_psl(pgl2(5)));
  CHECK(is_psl(a4_at_13()));
}

TEST_CASE("is_hasse") {
  CHECK_FALSE(is_hasse(closure(13, {}, 1)));
  CHECK(is_hasse(a4_at_13()));
  auto A5 = find_subgroup(11, GroupLabel::a5(), 1, 200000);
  CHECK(classify(A5) == GroupLabel::a5());
  CHECK_FALSE(is_hasse(A5));
  // The witness: an order-3 element without fixed points.
  bool free3 = false;
  for (const auto& g : A5.elements()) free3 |= g.order() == 3 && fixed_point_count(g) == 0;
  CHECK(free3);
}

TEST_CASE("classify") {
  CHECK(classify(closure(13, {}, 1)) == GroupLabel::cyclic(1));
  CHECK(classify(a4_at_13()) == GroupLabel::a4());
  CHECK(classify(closure(13, {M(13, 1, 1, 0, 1), M(13, -1, 0, 0, 1)}, 2184)) == GroupLabel::dihedral(26));
  CHECK(classify(split_cartan_normalizer(13)) == GroupLabel::dihedral(24));
  CHECK(classify(nonsplit_cartan(13)) == GroupLabel::cyclic(14));
  CHECK(classify(psl2(7)).kind == GroupLabel::Kind::ContainsPSL);
  CHECK(classify(borel(7)).kind == GroupLabel::Kind::Other);
  CHECK(GroupLabel::parse("D26") == GroupLabel::dihedral(26));
  CHECK(GroupLabel::parse("C3").to_string() == "C3");
  CHECK_THROWS_AS(GroupLabel::parse("D3"), Error);
}

TEST_CASE("find_subgroup") {
  auto A = find_subgroup(13, GroupLabel::a4(), 42, 100000);
  CHECK(classify(A) == GroupLabel::a4());
  auto K = find_subgroup(5, GroupLabel::dihedral(4), 1, 100000, {true, true});
  CHECK(classify(K) == GroupLabel::dihedral(4));
  CHECK(is_in_split_cartan_normalizer_class(K));
  try {
    find_subgroup(7, GroupLabel::a5(), 1, 1000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
  // Oracle for (7, A5): Lagrange, 60 does not divide |PGL_2(F_7)| = 336.
  CHECK(pgl2_order(7) % 60 != 0);
  // Determinism.
  auto A2 = find_subgroup(13, GroupLabel::a4(), 42, 100000);
  CHECK(A.generators() == A2.generators());
}

TEST_CASE("split Cartan normalizer class") {
  CHECK(is_in_split_cartan_normalizer_class(split_cartan_normalizer(13)));
  CHECK_FALSE(is_in_split_cartan_normalizer_class(nonsplit_cartan(13)));
  CHECK_THROWS_AS(is_in_split_cartan_normalizer_class(a4_at_13()), Error);
}

TEST_CASE("congruence prediction") {
  CHECK(congruence_prediction(GroupLabel::a4(), 13, false));
  CHECK(congruence_prediction(GroupLabel::dihedral(4), 5, true));
  CHECK_FALSE(congruence_prediction(GroupLabel::dihedral(4), 5, false));
  CHECK_FALSE(congruence_prediction(GroupLabel::a5(), 11, false));
  CHECK(congruence_prediction(GroupLabel::s4(), 73, false));
}

TEST_CASE("orbit counts") {
  CHECK(orbit_count(closure(13, {}, 1)) == 14);
  auto c2 = closure(13, {M(13, -5, 0, 0, 5)}, 2184);
  CHECK(c2.order() == 2);
  CHECK(orbit_count(c2) == 8);
  auto c3 = find_subgroup(13, GroupLabel::cyclic(3), 3, 1000);
  CHECK(fixed_point_count(c3.generators()[0]) == 2);
  CHECK(orbit_count(c3) == 6);
}

TEST_CASE("Mackey examples") {
  CHECK(mackey_check(closure(13, {}, 1)));
  CHECK(mackey_check(a4_at_13()));
  auto B = borel(13);
  CHECK(orbit_sizes(B) == std::vector<int>{1, 13});
  CHECK(mackey_check(B));
}

TEST_CASE("permutation parity invariants") {
  for (int l : {5, 7, 11, 13}) {
    auto P = psl2(l);
    for (const auto& h : P.elements()) CHECK(inversion_sign(permutation(h)) == 1);
    for (const auto& h : all_elements(l, false)) {
      int cycles = static_cast<int>(cycle_type(h).size());
      CHECK(inversion_sign(permutation(h)) == (cycles % 2 ? -1 : 1));
      // Odd permutations are exactly the non-square determinant classes.
      CHECK((inversion_sign(permutation(h)) == 1) == h.det_is_square());
    }
  }
}

TEST_CASE("Hasse subgroups have element orders dividing (l-1)/2") {
  for (int l : {5, 13, 29, 37}) {
    for (auto target : {GroupLabel::a4(), GroupLabel::dihedral(4), GroupLabel::dihedral(6)}) {
      for (uint64_t seed = 0; seed < 3; ++seed) {
        ProjSubgroup H = closure(l, {}, 1);
        try {
          H = find_subgroup(l, target, seed, 20000);
        } catch (const Error&) {
          continue;
        }
        if (!is_hasse(H)) continue;
        for (const auto& g : H.elements()) CHECK(((l - 1) / 2) % g.order() == 0);
      }
    }
  }
}

TEST_CASE("witness JSON round trip") {
  auto A = a4_at_13();
  std::string label;
  auto B = subgroup_from_json(A.to_json("A4"), &label);
  CHECK(label == "A4");
  CHECK(B.order() == 12);
  for (const auto& g : A.elements()) CHECK(B.contains(g));
}
