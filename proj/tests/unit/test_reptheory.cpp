#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "isoscope/reptheory.hpp"

using namespace isoscope::rep;

namespace {

struct Fixture {
  MatGroup G{13};
  ConjugacyClasses cls = conjugacy_classes(G);
  std::vector<SubgroupGL2> subs = standard_subgroups(G);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_CASE("GL2(F13) and its classes") {
  const auto& G = fx().G;
  const auto& cls = fx().cls;
  CHECK(G.order() == 26208);
  CHECK(cls.reps.size() == 168);
  size_t total = 0, singletons = 0;
  for (size_t s : cls.sizes) {
    total += s;
    singletons += (s == 1);
  }
  CHECK(total == 26208);
  CHECK(singletons == 12);
  for (int i = 0; i < 200; ++i) CHECK(G.mul(i, G.inv(i)) == G.identity());

  // Class-size oracle for GL2(F_q): central (1), non-semisimple q^2-1,
  // split q(q+1), non-split q(q-1).
  const size_t q = 13;
  std::map<size_t, int> by_size;
  for (size_t s : cls.sizes) ++by_size[s];
  CHECK(by_size[1] == 12);
  CHECK(by_size[q * q - 1] == 12);
  CHECK(by_size[q * (q + 1)] == 66);
  CHECK(by_size[q * (q - 1)] == 78);
}

TEST_CASE("the six subgroups") {
  const auto& subs = fx().subs;
  std::vector<size_t> orders, expect{288, 468, 624, 288, 312, 1872};
  for (const auto& H : subs) orders.push_back(H.order());
  CHECK(orders == expect);
  std::vector<size_t> idx;
  for (const auto& H : subs) idx.push_back(26208 / H.order());
  CHECK(idx == std::vector<size_t>{91, 56, 42, 91, 84, 14});
  CHECK(a4_pullback(fx().G).order() == 144);
}

TEST_CASE("permutation characters") {
  const auto& G = fx().G;
  const auto& cls = fx().cls;
  for (const auto& H : fx().subs) {
    auto chi = perm_character(G, cls, H);
    CAPTURE(H.name);
    CHECK(chi[cls.class_of[G.identity()]] == static_cast<int64_t>(26208 / H.order()));
    int64_t burnside = 0;
    for (size_t k = 0; k < chi.size(); ++k) {
      CHECK(chi[k] >= 0);
      burnside += static_cast<int64_t>(cls.sizes[k]) * chi[k];
    }
    CHECK(burnside == 26208);
    // Oracle: chi(g) = |G| |g^G cap H| / (|g^G| |H|).
    std::vector<int64_t> meet(cls.reps.size(), 0);
    for (int h : H.elements) ++meet[cls.class_of[h]];
    for (size_t k = 0; k < chi.size(); ++k)
      CHECK(chi[k] * static_cast<int64_t>(cls.sizes[k] * H.order()) == 26208 * meet[k]);
  }
  SubgroupGL2 whole = closure(G, "G", {G.index_of(G.encode(2, 0, 0, 1)), G.index_of(G.encode(1, 1, 0, 1)),
                                       G.index_of(G.encode(0, 1, 1, 0))});
  CHECK(whole.order() == 26208);
  for (auto v : perm_character(G, cls, whole)) CHECK(v == 1);
}

TEST_CASE("class functions are constant on classes") {
  const auto& G = fx().G;
  const auto& cls = fx().cls;
  const auto& B = fx().subs[5];
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    int k = static_cast<int>(rng() % cls.reps.size());
    int other = G.conj(cls.reps[k], static_cast<int>(rng() % G.order()));
    int64_t a = 0, b = 0;
    for (int x = 0; x < static_cast<int>(G.order()); ++x) {
      a += B.member[G.conj(cls.reps[k], x)];
      b += B.member[G.conj(other, x)];
    }
    CHECK(a == b);
  }
}

TEST_CASE("character identity") {
  auto r = verify_brauer_relation(fx().G, fx().cls);
  CHECK(r.holds);
  auto bad = verify_brauer_relation(fx().G, fx().cls, true);
  CHECK_FALSE(bad.holds);
  const int e = fx().cls.class_of[fx().G.identity()];
  const auto& c = bad.characters;
  CHECK(2 * c[0][e] + c[1][e] + c[2][e] == 280);
  CHECK(2 * c[3][e] + c[4][e] + c[5][e] == 2 * 182 + 84 + 14);
  auto csv = brauer_csv(fx().G, fx().cls, r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 169);
}
