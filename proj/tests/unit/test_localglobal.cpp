#include <doctest.h>

#include <random>

#include "isoscope/localglobal.hpp"
#include "isoscope/modcurves.hpp"

using namespace isoscope;
using namespace isoscope::lg;
using group::GroupLabel;

TEST_CASE("scan: the exceptional pair at 7 over Q") {
  ScanConfig cfg;
  cfg.l = 7;
  cfg.j0 = Rational("2268945/128");
  cfg.prime_bound = 10000;
  auto r = scan(cfg);
  CHECK(r.primes_sampled >= 1200);
  CHECK(r.counterexamples == 0);
  CHECK(r.local_success_fraction == 1);
  CHECK_FALSE(r.global_root_found());
  CHECK(r.verdict == Verdict::CandidateExceptional);
  CHECK(r.phi_disagreements == 0);
  CHECK(r.phi_compared > 1000);
  bool odd_dihedral = false;
  for (const auto& g : r.image_candidates)
    if (g.kind == GroupLabel::Kind::Dihedral && (g.order / 2) % 2 == 1 && 3 % (g.order / 2) == 0) odd_dihedral = true;
  CHECK(odd_dihedral);
}

namespace {

KValue q5(const std::string& s) { return parse_kvalue(s, 5); }

ScanReport scan5(const arith::QuadElem& s, uint64_t bound, const Integer& H = 1000000) {
  ScanConfig cfg;
  cfg.l = 5;
  cfg.d = 5;
  cfg.j0 = curves::xsplit5_j(s);
  cfg.prime_bound = bound;
  cfg.height_bound = H;
  return scan(cfg);
}

}  // namespace

TEST_CASE("scan over Q(sqrt 5) at 5") {
  auto ex = scan5(std::get<arith::QuadElem>(q5("3*sqrt(5)+1")), 3000);
  CHECK(ex.local_success_fraction == 1);
  CHECK_FALSE(ex.global_root_found());
  CHECK(ex.verdict == Verdict::CandidateExceptional);
  CHECK(ex.fiber_disagreements == 0);
  CHECK(ex.fiber_compared > 100);
  CHECK(ex.phi_disagreements == 0);

  auto glob = scan5(arith::QuadElem(5, 6), 3000);
  CHECK(glob.verdict == Verdict::NotExceptional);
  REQUIRE(glob.fiber_root);
  REQUIRE(glob.fiber_root->found());
  CHECK(as_rational(glob.fiber_root->roots[0]) == Rational(71));
  CHECK(glob.local_success_fraction == 1);

  // The pretender orbit has a global isogeny.
  auto pre = scan5(std::get<arith::QuadElem>(q5("(3*sqrt(5)-80)/41")), 2000);
  CHECK(pre.verdict == Verdict::NotExceptional);
  CHECK(pre.global_root_found());
}

TEST_CASE("scan: generic j has counterexamples; monotone in the bound") {
  ScanConfig cfg;
  cfg.l = 7;
  cfg.j0 = Rational(5);
  cfg.prime_bound = 500;
  auto small = scan(cfg);
  CHECK(small.verdict == Verdict::NotExceptional);
  CHECK(small.counterexamples > 0);
  cfg.prime_bound = 2000;
  auto big = scan(cfg);
  CHECK(big.verdict == Verdict::NotExceptional);
  CHECK(big.counterexamples >= small.counterexamples);
}

TEST_CASE("scan input checks and l = 3") {
  ScanConfig cfg;
  cfg.l = 2;
  cfg.j0 = Rational(5);
  CHECK_THROWS_AS(scan(cfg), Error);
  cfg.l = 7;
  cfg.j0 = Rational(1728);
  try {
    scan(cfg);
    FAIL("expected SpecialJ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpecialJ);
  }
  // CM discriminant -27: 3-isogenous to j = 0 over Q.
  cfg.l = 3;
  cfg.j0 = Rational(-12288000);
  cfg.prime_bound = 1000;
  auto r = scan(cfg);
  CHECK(r.local_success_fraction == 1);
  CHECK(r.verdict == Verdict::NotExceptional);
  CHECK(r.phi_root.found());
}

TEST_CASE("element-order bound and non-dihedral classification") {
  CHECK(david_bound_filter(13, GroupLabel::a4(), 2));
  CHECK_FALSE(david_bound_filter(37, GroupLabel::a4(), 2));
  for (int l : {5, 7, 11, 13, 29, 31, 37, 41, 43, 61})
    CHECK(david_bound_filter(l, GroupLabel::a5(), 2) == (l <= 41));
  CHECK_THROWS_AS(david_bound_filter(13, GroupLabel::dihedral(6), 2), Error);
  auto m = nondihedral_quadratic_classification();
  CHECK(m["A4"] == std::vector<int>{13});
  CHECK(m["S4"].empty());
  CHECK(m["A5"].empty());
}

TEST_CASE("sqrt(l*) membership") {
  CHECK(sqrt_lstar_in_field(5, 5));
  CHECK(sqrt_lstar_in_field(7, -7));
  CHECK_FALSE(sqrt_lstar_in_field(7, 7));
  CHECK(sqrt_lstar_in_field(13, 13));
  for (int64_t d : {2, 3, 5, 6, 7, 10, 13, 17}) CHECK_FALSE(sqrt_lstar_in_field(11, d));
  CHECK(sqrt_lstar_in_field(11, -11));
  CHECK_FALSE(sqrt_lstar_in_field(7, 0));
}

TEST_CASE("Phi_11 density harness") {
  // j-invariants with a rational 11-isogeny: X_0(11) has these rational
  // non-cuspidal images (including CM by -11).
  std::vector<Conj11Entry> known{{"cm-11", 0, Rational(-32768)},
                                 {"x0-11-a", 0, Rational(-121)},
                                 {"x0-11-b", 0, Rational(-24729001)}};
  auto r = conjecture11_evidence(known, 1500);
  for (const auto& x : r) {
    CAPTURE(x.entry.label);
    CHECK(x.primes >= 100);
    CHECK(x.with_linear_factor == x.primes);
    CHECK(x.density_one_like);
    CHECK_FALSE(x.conjecture_consistent);
  }
  std::vector<Conj11Entry> generic{{"g", 5, q5("1+sqrt(5)")}};
  auto g = conjecture11_evidence(generic, 3000);
  CHECK(g[0].primes >= 100);
  CHECK(g[0].fraction() < 0.95);
  CHECK(g[0].conjecture_consistent);

  auto parsed = parse_conj11_file(nlohmann::json::parse(R"J({"entries":[{"label":"a","field":"Q(sqrt(13))","j":"3-2*sqrt(13)"}]})J"));
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].d == 13);
  CHECK_THROWS_AS(parse_conj11_file(nlohmann::json::object()), Error);
}
