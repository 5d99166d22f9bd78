#include <doctest.h>

#include <random>

#include "isoscope/modcurves.hpp"
#include "isoscope/modpoly.hpp"

using namespace isoscope;
using namespace isoscope::curves;
using arith::FiniteField;
using arith::QuadField;

namespace {

QuadElem q5(const std::string& s) { return std::get<QuadElem>(promote(parse_kvalue(s, 5), 5)); }

QuadElem random_s(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-40, 40), den(1, 12);
  return QuadElem(5, arith::make_rational(d(rng), den(rng)), arith::make_rational(d(rng), den(rng)));
}

// Brute-force singular points over F_{p^k}.
bool has_singular_point_over(const TernaryForm& F, const FiniteField& E) {
  const std::array<TernaryForm, 4> forms{F, F.partial(0), F.partial(1), F.partial(2)};
  auto singular = [&](const arith::FFElem& x, const arith::FFElem& y, const arith::FFElem& z) {
    for (const auto& G : forms)
      if (!E.is_zero(G.eval(E, x, y, z))) return false;
    return true;
  };
  const uint64_t q = E.size();
  if (singular(E.one(), E.zero(), E.zero())) return true;
  for (uint64_t i = 0; i < q; ++i)
    if (singular(E.element(i), E.one(), E.zero())) return true;
  for (uint64_t i = 0; i < q; ++i)
    for (uint64_t j = 0; j < q; ++j)
      if (singular(E.element(i), E.element(j), E.one())) return true;
  return false;
}

TernaryForm random_quartic(std::mt19937_64& rng, bool force_singular_origin) {
  TernaryForm F;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      int k = 4 - i - j;
      if (force_singular_origin && k >= 3) continue;
      F.add_term(i, j, k, static_cast<long>(rng() % 7) - 3);
    }
  return F;
}

}  // namespace

TEST_CASE("xsplit5_j values") {
  CHECK(xsplit5_j(q5("1")) == QuadElem(5, Rational("-56623104/161051")));
  CHECK(xsplit5_j(q5("3*sqrt(5)+1")) ==
        QuadElem(5, Rational("741305345279328/41615795893"), Rational("337876318862280/41615795893")));
  CHECK(xsplit5_j(q5("(3*sqrt(5)+2)")) ==
        QuadElem(5, Rational("622630488102469632/18658757027251"), Rational("277374956280053760/18658757027251")));
  try {
    xsplit5_j(q5("(-5+sqrt(5))/2"));
    FAIL("expected PoleAtS");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtS);
  }
}

TEST_CASE("sigma orbit and j invariance") {
  auto c = xsplit5_conjugates(q5("3*sqrt(5)+1"));
  CHECK(c[1] == q5("(sqrt(5)-15)/7"));
  CHECK(c[2] == q5("(-22*sqrt(5)-30)/19"));
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    QuadElem s = random_s(rng);
    QuadElem den = s * s + QuadElem(5, 5) * s + QuadElem(5, 5);
    if (den.a() == 0 && den.b() == 0) continue;
    auto o = xsplit5_conjugates(s);
    CHECK(xsplit5_sigma(o[2]) == s);
    CHECK(xsplit5_j(o[1]) == xsplit5_j(s));
    CHECK(xsplit5_j(o[2]) == xsplit5_j(s));
    CHECK(xsplit5_is_exceptional(s).verdict == xsplit5_is_exceptional(o[1]).verdict);
    ++tested;
  }
  CHECK(tested >= 190);
  try {
    xsplit5_sigma(q5("(-5-sqrt(5))/2"));
    FAIL("expected PoleInOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleInOrbit);
  }
}

TEST_CASE("xsplit5 exceptionality") {
  CHECK(xsplit5_is_exceptional(q5("3*sqrt(5)+1")).verdict == Xsplit5Verdict::Exceptional);
  auto pre = xsplit5_is_exceptional(q5("(3*sqrt(5)-80)/41"));
  CHECK(pre.verdict == Xsplit5Verdict::HasGlobalIsogeny);
  REQUIRE(pre.square_witnesses.size() == 1);
  CHECK(pre.square_witnesses[0] == q5("3*sqrt(5)+2"));
  CHECK(xsplit5_is_exceptional(q5("6")).verdict == Xsplit5Verdict::HasGlobalIsogeny);
  CHECK(xsplit5_is_exceptional(q5("(-5-sqrt(5))/2")).verdict == Xsplit5Verdict::Pole);

  // s = t + 5/t with t rational always has a global isogeny.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Rational t = arith::make_rational(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 30) + 1);
    if (t == 0) continue;
    QuadElem s(5, t + 5 / t);
    if (s.a() * s.a() + 5 * s.a() + 5 == 0) continue;
    CHECK(xsplit5_is_exceptional(s).verdict == Xsplit5Verdict::HasGlobalIsogeny);
  }
}

// The j-map is a composite through X_0(5): the fiber polynomial of level 5
// must vanish at t5 = t(t^4 + 5t^3 + 15t^2 + 25t + 25) over j(s), s = t + 5/t.
TEST_CASE("xsplit5_j factors through the level-5 fiber") {
  auto F5 = modpoly::f5_polynomial();
  QuadField K(5);
  for (long tn : {1L, 2L, -3L, 7L}) {
    Rational t(tn);
    Rational t5 = t * (t * t * t * t + 5 * t * t * t + 15 * t * t + 25 * t + 25);
    QuadElem j = xsplit5_j(QuadElem(5, t + 5 / t));
    CHECK(K.is_zero(F5.poly.eval(K, QuadElem(5, t5), j)));
  }
  // s = 6: t in {1, 5}, t5 = 71
  CHECK(K.is_zero(F5.poly.eval(K, QuadElem(5, 71), xsplit5_j(q5("6")))));
}

TEST_CASE("hauptmodul identity") {
  auto ok = hauptmodul_identity_check(30);
  CHECK(ok.rational_identity);
  CHECK(ok.series_identity);
  auto bad = hauptmodul_identity_check(30, 11);
  CHECK_FALSE(bad.rational_identity);
  CHECK_FALSE(bad.series_identity);
  CHECK_THROWS_AS(hauptmodul_identity_check(10), Error);
}

TEST_CASE("X_S4(13) model") {
  auto C = xs413_curve();
  auto d = xs413_cusp_cubic();
  CHECK(C.terms.size() == 12);
  CHECK(d.terms.size() == 10);
  CHECK(C.is_homogeneous());
  CHECK(C.degree() == 4);
  CHECK(d.is_homogeneous());
  CHECK(d.degree() == 3);

  arith::RationalField Q;
  CHECK(xs413_contains(Q, Rational(1), Rational(3), Rational(-2)));
  CHECK(xs413_contains(Q, Rational(0), Rational(1), Rational(0)));
  CHECK(xs413_contains(Q, Rational(1), Rational(0), Rational(0)));
  CHECK(xs413_contains(Q, Rational(0), Rational(0), Rational(1)));
  CHECK_FALSE(xs413_contains(Q, Rational(1), Rational(1), Rational(1)));
  QuadField K(13);
  CHECK(xs413_contains(K, K.make(3, 1), K.zero(), K.make(2, 0)));
  CHECK_THROWS_AS(xs413_contains(Q, Rational(0), Rational(0), Rational(0)), Error);

  CHECK(xs413_verify_points().pass);
  auto cusps = xs413_verify_cusps();
  CHECK(cusps.pass);
  auto zeros = xs413_verify_zeros();
  CHECK(zeros.pass);
  MESSAGE(zeros.to_json().dump());
}

TEST_CASE("smoothness of the quartic") {
  CHECK(xs413_smooth(3));
  bool any = false;
  for (uint64_t p : {2, 3, 5, 7}) {
    bool sm = xs413_smooth(p);
    MESSAGE("p = " << p << ": " << std::string(sm ? "smooth" : "not certified"));
    any |= sm;
  }
  CHECK(any);
  TernaryForm node;
  node.add_term(0, 2, 2, 1);
  node.add_term(4, 0, 0, -1);
  for (uint64_t p : {3, 5, 7}) CHECK_FALSE(quartic_smooth_mod_p(node, p));
  CHECK_THROWS_AS(xs413_smooth(11), Error);
}

TEST_CASE("smoothness agrees with brute force on random quartics") {
  std::mt19937_64 rng(99);
  int smooth = 0, singular = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const uint64_t p = std::array<uint64_t, 3>{2, 3, 5}[trial % 3];
    bool force = trial % 4 == 0;
    auto F = random_quartic(rng, force);
    if (F.terms.empty()) continue;
    bool claim = quartic_smooth_mod_p(F, p);
    if (force) CHECK_FALSE(claim);
    bool found = false;
    for (int k = 1; k <= (p == 2 ? 4 : p == 3 ? 3 : 2) && !found; ++k) found = has_singular_point_over(F, FiniteField::make(p, k));
    if (found) CHECK_FALSE(claim);
    (claim ? smooth : singular)++;
  }
  CHECK(smooth > 5);
  CHECK(singular > 5);
}

TEST_CASE("X_split(11) search") {
  auto f = xsplit11_sextic();
  CHECK(f.size() == 7);
  CHECK(f.back() == 4);
  for (int64_t d : {1, 5, -11, 7}) {
    auto pts = xsplit11_search(d, 3);
    bool zero = false;
    for (const auto& p : pts)
      if (as_rational(p.x) == Rational(0)) zero = true;
    CHECK(zero);
  }
  auto has_x1 = [](const std::vector<SextPoint>& pts) {
    for (const auto& p : pts)
      if (as_rational(p.x) == Rational(1)) return true;
    return false;
  };
  CHECK(has_x1(xsplit11_search(7, 2)));
  CHECK_FALSE(has_x1(xsplit11_search(5, 2)));
  CHECK_FALSE(has_x1(xsplit11_search(1, 2)));

  auto rat = xsplit11_search(1, 20);
  auto quad = xsplit11_search(5, 20);
  for (const auto& r : rat) {
    Rational x = std::get<Rational>(r.x);
    bool in = std::any_of(quad.begin(), quad.end(), [&](const SextPoint& q) {
      return as_rational(q.x) == x;
    });
    CHECK(in);
  }
}
