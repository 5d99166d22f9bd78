#include <doctest.h>

#include <functional>
#include <random>

#include "isoscope/factor.hpp"
#include "isoscope/finite_field.hpp"
#include "isoscope/number_field.hpp"
#include "isoscope/quadratic.hpp"
#include "isoscope/series.hpp"

using namespace isoscope;
using namespace isoscope::arith;

namespace {

Rational rq(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return rq(num(rng), den(rng));
}

FFPoly ff_poly(const FiniteField& F, std::vector<int64_t> c) {
  FFPoly r;
  for (auto x : c) r.push_back(F.from_int(x));
  poly::trim(F, r);
  return r;
}

// Brute-force factor degrees: peel off the lowest-degree monic divisor found
// by enumerating every monic polynomial of that degree.
std::vector<int> naive_shape(const FiniteField& F, FFPoly f) {
  std::vector<int> out;
  const int p = static_cast<int>(F.p());
  while (poly::degree<FiniteField>(f) > 0) {
    bool found = false;
    for (int d = 1; d <= poly::degree<FiniteField>(f) && !found; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (int idx = 0; idx < count && !found; ++idx) {
        FFPoly g(d + 1, F.zero());
        int t = idx;
        for (int i = 0; i < d; ++i) {
          g[i] = F.from_int(t % p);
          t /= p;
        }
        g[d] = F.one();
        auto [q, r] = poly::divmod(F, f, g);
        if (r.empty()) {
          out.push_back(d);
          f = q;
          found = true;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rational normalization") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng);
    if (a == 0) continue;
    CHECK(a * (1 / a) == 1);
    Rational b = a;
    b.canonicalize();
    CHECK(b == a);
    CHECK(gcd(a.get_num(), a.get_den()) == 1);
  }
  CHECK(*parse_rational("2268945/128") == rq(2268945, 128));
  CHECK(*parse_rational("-6/4") == rq(-3, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
}

TEST_CASE("primality and modular helpers") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000000007));
  CHECK_FALSE(is_prime_u64(561));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK(primes_up_to(30) == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(legendre(5, 11) == 1);
  CHECK(legendre(5, 13) == -1);
  auto r = sqrt_mod(5, 11);
  REQUIRE(r);
  CHECK(*r * *r % 11 == 5);
  CHECK(squarefree_part(-44) == -11);
  CHECK(is_squarefree(13));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("quad_sqrt examples") {
  auto z = quad_sqrt(QuadElem(5, 9));
  REQUIRE(z);
  CHECK(*z * *z == QuadElem(5, 9));
  CHECK_FALSE(quad_sqrt(QuadElem(5, 26, 6)));
  auto w = quad_sqrt(QuadElem(5, 9, 4));
  REQUIRE(w);
  CHECK((*w == QuadElem(5, 2, 1) || *w == QuadElem(5, -2, -1)));
  // 5 = (sqrt 5)^2
  auto s5 = quad_sqrt(QuadElem(5, 5));
  REQUIRE(s5);
  CHECK(*s5 * *s5 == QuadElem(5, 5));
}

TEST_CASE("quad_sqrt recovers squares") {
  std::mt19937_64 rng(7);
  for (int64_t d : {5, 13, -11}) {
    for (int i = 0; i < 1000; ++i) {
      QuadElem w(d, random_rational(rng), random_rational(rng));
      QuadElem sq = w * w;
      auto r = quad_sqrt(sq);
      REQUIRE(r);
      CHECK(*r * *r == sq);
    }
  }
}

TEST_CASE("quadratic field arithmetic") {
  QuadElem a(13, rq(3), rq(1));
  CHECK(a.to_string() == "3+sqrt(13)");
  CHECK(a.norm() == -4);
  CHECK(a * a.inverse() == QuadElem(13, 1));
  CHECK_THROWS_AS(QuadElem(12, 1), Error);
  CHECK_THROWS_AS(QuadElem(5, 1) + QuadElem(13, 1), Error);
}

TEST_CASE("finite field construction") {
  auto f5 = FiniteField::make(5, 1);
  CHECK(f5.degree() == 1);
  CHECK(f5.modulus() == std::vector<uint64_t>{0, 1});
  auto f9 = FiniteField::make(3, 2);
  CHECK(f9.modulus() == std::vector<uint64_t>{1, 0, 1});
  auto f512 = FiniteField::make(2, 9);
  CHECK(is_irreducible_mod_p(f512.modulus(), 2));
  auto x = f512.gen();
  CHECK(f512.pow(x, 512) == x);
  CHECK_THROWS_AS(FiniteField::make(9, 1), Error);
  try {
    FiniteField::make(15, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositeModulus);
  }
  try {
    FiniteField::with_modulus(5, {1, 0, 1});  // x^2+1 = (x-2)(x+2) mod 5
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
}

TEST_CASE("lexicographic modulus is the first irreducible") {
  // Independent scan: smallest (c1, c0) with x^2 + c1 x + c0 rootless mod 7.
  std::vector<uint64_t> expect;
  for (uint64_t c1 = 0; c1 < 7 && expect.empty(); ++c1)
    for (uint64_t c0 = 1; c0 < 7 && expect.empty(); ++c0) {
      bool root = false;
      for (uint64_t x = 0; x < 7; ++x) root |= (x * x + c1 * x + c0) % 7 == 0;
      if (!root) expect = {c0, c1, 1};
    }
  CHECK(FiniteField::make(7, 2).modulus() == expect);
}

TEST_CASE("Frobenius is a field automorphism") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : std::vector<std::pair<uint64_t, int>>{{5, 3}, {7, 2}, {2, 5}, {101, 2}, {3, 7}}) {
    auto F = FiniteField::make(p, k);
    const uint64_t q = F.size();
    for (int i = 0; i < 50; ++i) {
      auto a = F.element(rng() % q), b = F.element(rng() % q);
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      CHECK(F.pow(a, q) == a);
      CHECK(F.frobenius(F.pth_root(a)) == a);
      if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}

TEST_CASE("poly_degree_multiset examples") {
  auto f5 = FiniteField::make(5, 1);
  CHECK(poly_degree_multiset(f5, ff_poly(f5, {-1, 0, 1})) == std::vector<int>{1, 1});
  auto f3 = FiniteField::make(3, 1);
  CHECK(poly_degree_multiset(f3, ff_poly(f3, {1, 0, 1})) == std::vector<int>{2});
  auto f7 = FiniteField::make(7, 1);
  CHECK(poly_degree_multiset(f7, ff_poly(f7, {0, -1, 0, 1})) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(poly_degree_multiset(f7, FFPoly{}), Error);
  // Inseparable part: x^10 - 1 = (x^2 - 1)^5 over F_5.
  CHECK(poly_degree_multiset(f5, ff_poly(f5, {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("poly_degree_multiset agrees with brute force over F_5") {
  auto F = FiniteField::make(5, 1);
  for (int deg = 1; deg <= 4; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= 5;
    for (int idx = 0; idx < count; ++idx) {
      FFPoly f(deg + 1, F.zero());
      int t = idx;
      for (int i = 0; i < deg; ++i) {
        f[i] = F.from_int(t % 5);
        t /= 5;
      }
      f[deg] = F.one();
      auto shape = poly_degree_multiset(F, f);
      int sum = 0;
      for (int d : shape) sum += d;
      CHECK(sum == deg);
      CHECK(shape == naive_shape(F, f));
    }
  }
}

TEST_CASE("poly_degree_multiset over an extension field") {
  // x^2 + 1 splits over F_9.
  auto F = FiniteField::make(3, 2);
  CHECK(poly_degree_multiset(F, ff_poly(F, {1, 0, 1})) == std::vector<int>{1, 1});
  // x^3 - x - 1 is irreducible over F_3 and stays so over F_9 (3 coprime to 2).
  CHECK(poly_degree_multiset(F, ff_poly(F, {-1, -1, 0, 1})) == std::vector<int>{3});
}

TEST_CASE("number field arithmetic") {
  NumberField K({1, -4, 1, 1});  // x^3 + x^2 - 4x + 1
  auto a = K.gen();
  auto lhs = K.add(K.sub(K.add(K.mul(K.mul(a, a), a), K.mul(a, a)), K.mul(K.from_int(4), a)), K.one());
  CHECK(K.is_zero(lhs));
  std::mt19937_64 rng(11);
  auto rnd = [&] { return K.from_coeffs({random_rational(rng), random_rational(rng), random_rational(rng)}); };
  for (int i = 0; i < 100; ++i) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(K.mul(K.mul(x, y), z) == K.mul(x, K.mul(y, z)));
    CHECK(K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z)));
    CHECK(K.mul(x, y) == K.mul(y, x));
    if (!K.is_zero(x)) CHECK(K.mul(x, K.inv(x)) == K.one());
  }
}

TEST_CASE("irreducibility over Q") {
  CHECK(is_irreducible_over_q({1, -4, 1, 1}));
  CHECK(is_irreducible_over_q({3, -4, 2, 1, 1}));
  CHECK(is_irreducible_over_q({-39, 0, 13, 0, 1}));
  CHECK(is_irreducible_over_q({52, 0, -13, 0, 1}));
  // Galois group D4: reducible modulo every prime, irreducible over Q.
  CHECK(is_irreducible_over_q({1, 0, -9, 0, 32, 0, -9, 0, 1}));
  CHECK(is_irreducible_over_q({1, 0, -10, 0, 1}));
  CHECK_FALSE(is_irreducible_over_q({4, 0, 0, 0, 1}));          // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible_over_q({-2, 0, 1}) == false);      // x^2 - 2 irreducible
  CHECK_FALSE(is_irreducible_over_q({6, -5, 1}));               // (x-2)(x-3)
  CHECK_FALSE(is_irreducible_over_q({1, 0, -3, 0, 1}));         // (x^2-x-1)(x^2+x-1)
  CHECK_THROWS_AS(NumberField({6, -5, 1}), Error);
}

TEST_CASE("power series bookkeeping") {
  std::mt19937_64 rng(5);
  auto rnd = [&](int start, int prec) {
    IntSeries s(start, prec);
    for (int e = start; e < prec; ++e) s.at(e) = Integer(static_cast<long>(rng() % 21) - 10);
    s.at(start) = 1;
    return s;
  };
  for (int i = 0; i < 20; ++i) {
    auto a = rnd(-1, 15), b = rnd(0, 12), c = rnd(-2, 18);
    auto l = (a * b) * c, r = a * (b * c);
    REQUIRE(l.prec() == r.prec());
    for (int e = l.start(); e < l.prec(); ++e) CHECK(l.coeff(e) == r.coeff(e));
  }
  auto a = rnd(-1, 20);
  auto one = a * a.inverse();
  CHECK(one.coeff(0) == 1);
  for (int e = 1; e < one.prec(); ++e) CHECK(one.coeff(e) == 0);
  CHECK_THROWS_AS(a.coeff(20), Error);
}

TEST_CASE("Delta and j expansions") {
  auto d = delta_q_expansion(12);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);
  CHECK(d.coeff(11) == 534612);

  // Oracle: 1/prod(1-q^n)^24 from the sigma_1 recurrence n f_n = 24 sum sigma_1(k) f_{n-k},
  // then multiply by E_4^3 computed from sigma_3 directly.
  const int N = 40;
  std::vector<Integer> f(N + 1);
  f[0] = 1;
  auto sigma = [](int n, int k) {
    Integer s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer t = 1;
        for (int i = 0; i < k; ++i) t *= d;
        s += t;
      }
    return s;
  };
  for (int n = 1; n <= N; ++n) {
    Integer s = 0;
    for (int k = 1; k <= n; ++k) s += sigma(k, 1) * f[n - k];
    f[n] = 24 * s / n;
  }
  std::vector<Integer> e4(N + 1);
  e4[0] = 1;
  for (int n = 1; n <= N; ++n) e4[n] = 240 * sigma(n, 3);
  auto conv = [&](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    std::vector<Integer> z(N + 1);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) z[i + j] += x[i] * y[j];
    return z;
  };
  auto oracle = conv(conv(conv(e4, e4), e4), f);

  auto j = j_q_expansion(N);
  CHECK(j.start() == -1);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);
  for (int e = -1; e < N; ++e) CHECK(j.coeff(e) == oracle[e + 1]);
  CHECK(j_q_expansion(1).coeff(-1) == 1);
}
