#include "isoscope/modpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "isoscope/numeric.hpp"
#include "isoscope/series.hpp"

namespace isoscope::modpoly {

using arith::FFElem;
using arith::FFPoly;
using arith::FiniteField;
using arith::Integer;
using arith::IntSeries;
using arith::j_q_expansion;
using arith::QuadElem;
using arith::QuadField;
using arith::Rational;
using arith::RationalField;

namespace {

void check_phi_level(int l) {
  static const std::set<int> ok{2, 3, 5, 7, 11, 13};
  if (!ok.count(l)) fail(ErrorCode::InvalidArgument, "modular polynomials are built for l in {2,3,5,7,11,13}");
}

IntSeries constant_series(const Integer& c, int prec) { return IntSeries::monomial(c, 0, prec); }

std::vector<Integer> int_poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

IsogenyPolynomial compute_phi(int l) {
  check_phi_level(l);
  const int guard = 10;
  // Each Newton step and the product with j(q^l) lose a bounded number of
  // q-exponents; M leaves at least `guard` verified terms after elimination.
  const int M = 2 * l + guard + 6;
  const int Nu = l * M + l + 2;

  // Power sums over the l conjugates j((tau + i)/l), as series in q.
  const IntSeries ju = j_q_expansion(Nu);
  std::vector<IntSeries> P(l + 1);
  IntSeries pw = ju;
  for (int k = 1; k <= l; ++k) {
    if (k > 1) pw = pw * ju;
    P[k] = pw.extract_multiples(l) * Integer(l);
  }

  // Newton's identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i.
  std::vector<IntSeries> e(l + 1);
  e[0] = constant_series(1, Nu);
  for (int k = 1; k <= l; ++k) {
    IntSeries s = e[k - 1] * P[1];
    for (int i = 2; i <= k; ++i) {
      IntSeries t = e[k - i] * P[i];
      s = (i % 2) ? s + t : s - t;
    }
    IntSeries q(s.start(), s.prec());
    for (int x = s.start(); x < s.prec(); ++x) {
      Integer c = s.coeff(x);
      if (c % k != 0) fail(ErrorCode::PrecisionExhausted, "non-integral symmetric function; precision bookkeeping bug");
      q.set(x, c / k);
    }
    e[k] = q;
  }

  // Coefficient of X^i in (X - j(q^l)) * sum_k (-1)^k e_k X^{l-k}.
  const IntSeries J = j_q_expansion(M + 2).inflate(l);
  auto signed_e = [&](int k) { return (k % 2) ? -e[k] : e[k]; };
  std::vector<IntSeries> coeff(l + 2);
  for (int i = 0; i <= l + 1; ++i) {
    IntSeries c = constant_series(0, Nu);
    if (i >= 1) c = c + signed_e(l - i + 1);
    if (i <= l) c = c - J * signed_e(l - i);
    coeff[i] = c;
  }

  const IntSeries jq = j_q_expansion(M + 2 * l + 8);
  std::vector<IntSeries> jpow{constant_series(1, Nu)};
  for (int m = 1; m <= l + 1; ++m) jpow.push_back(jpow.back() * jq);

  IsogenyPolynomial out{l, {}, IsogenyPolynomial::Kind::Classical};
  for (int i = 0; i <= l + 1; ++i) {
    IntSeries S = coeff[i];
    while (true) {
      int v = S.valuation();
      if (v >= S.prec() || v > 0) break;
      int m = -v;
      if (m > l + 1) fail(ErrorCode::PrecisionExhausted, "pole order exceeds l+1");
      Integer c = S.coeff(v);
      out.poly.add_term(i, m, c);
      S = S - jpow[m] * c;
    }
    if (S.prec() < guard + 1 || !S.is_zero())
      fail(ErrorCode::PrecisionExhausted, "elimination did not terminate exactly for X^" + std::to_string(i));
  }
  return out;
}

bool verify_phi(const IsogenyPolynomial& P, int N) {
  const int l = P.l;
  const int dx = P.poly.degree_x(), dy = P.poly.degree_y();
  if (dx < 0) return false;
  const int Nj = N + (dy + 1) + l * dx + 4;
  const IntSeries jq = j_q_expansion(Nj);
  std::vector<IntSeries> ypow{constant_series(1, Nj + 1)};
  for (int m = 1; m <= dy; ++m) ypow.push_back(ypow.back() * jq);

  // J^i loses l(i-1) absolute terms to the pole at each multiplication.
  const int keep = N + dy + l * dx + 3;
  const IntSeries J = j_q_expansion(keep / l + 2).inflate(l).truncated(keep);
  IntSeries Jpow = constant_series(1, keep);
  IntSeries total = constant_series(0, N + 1);
  for (int i = 0; i <= dx; ++i) {
    if (i > 0) Jpow = (Jpow * J).truncated(keep);
    IntSeries T = constant_series(0, Nj + 1);
    for (const auto& [key, c] : P.poly.terms())
      if (key.first == i) T = T + ypow[key.second] * c;
    total = total + T * Jpow;
  }
  if (total.prec() <= N) fail(ErrorCode::PrecisionExhausted, "verification precision too low");
  for (int e = total.start(); e <= N; ++e)
    if (total.coeff(e) != 0) return false;
  return true;
}

bool kronecker_congruence(const IsogenyPolynomial& P) {
  const int l = P.l;
  BiPoly expect;
  expect.add_term(l + 1, 0, 1);
  expect.add_term(0, l + 1, 1);
  expect.add_term(l, l, -1);
  expect.add_term(1, 1, -1);
  std::set<BiPoly::Key> keys;
  for (const auto& [k, c] : P.poly.terms()) keys.insert(k);
  for (const auto& [k, c] : expect.terms()) keys.insert(k);
  for (const auto& k : keys) {
    Integer diff = P.poly.coeff(k.first, k.second) - expect.coeff(k.first, k.second);
    if (diff % l != 0) return false;
  }
  return true;
}

IsogenyPolynomial f13_polynomial() {
  std::vector<Integer> quad{13, 5, 1}, quart{1, 19, 20, 7, 1};
  auto p = int_poly_mul(quad, int_poly_mul(quart, int_poly_mul(quart, quart)));
  IsogenyPolynomial out{13, {}, IsogenyPolynomial::Kind::HauptmodulFiber};
  for (size_t i = 0; i < p.size(); ++i) out.poly.add_term(static_cast<int>(i), 0, p[i]);
  out.poly.add_term(1, 1, -1);
  return out;
}

IsogenyPolynomial f5_polynomial() {
  std::vector<Integer> q{3125, 250, 1};
  auto p = int_poly_mul(q, int_poly_mul(q, q));
  IsogenyPolynomial out{5, {}, IsogenyPolynomial::Kind::HauptmodulFiber};
  for (size_t i = 0; i < p.size(); ++i) out.poly.add_term(static_cast<int>(i), 0, p[i]);
  out.poly.add_term(5, 1, -1);
  return out;
}

std::optional<IsogenyPolynomial> fiber_polynomial(int l) {
  if (l == 5) return f5_polynomial();
  if (l == 13) return f13_polynomial();
  return std::nullopt;
}

FFPoly specialize_mod_p(const IsogenyPolynomial& P, const FiniteField& F, const FFElem& j0) {
  return P.poly.specialize_y(F, j0);
}

std::vector<std::vector<int>> CycleProfile::support() const {
  std::vector<std::vector<int>> out;
  for (const auto& [k, v] : histogram) out.push_back(k);
  return out;
}

nlohmann::json CycleProfile::to_json() const {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [k, v] : histogram) hist.push_back({k, v});
  return {{"l", l}, {"samples", samples}, {"skipped", skipped}, {"histogram", hist}};
}

CycleProfile cycle_profile(const IsogenyPolynomial& P, const KValue& j0, uint64_t prime_bound, PrimeFilter filter) {
  CycleProfile prof;
  prof.l = P.l;
  const int64_t d = field_d(j0);
  const int deg = P.poly.degree_x();
  const uint64_t l = static_cast<uint64_t>(P.l);
  for (uint64_t p : arith::primes_up_to(prime_bound)) {
    if (p < 5 || p == l) continue;
    if (d != 0 && arith::legendre(d, p) == 0) {
      ++prof.skipped;
      continue;
    }
    for (const auto& prime : ec::primes_above(d, p)) {
      const uint64_t nrm = prime.norm();
      if (nrm > prime_bound) continue;
      if (filter != PrimeFilter::All) {
        bool square = arith::legendre(static_cast<int64_t>(nrm % l), l) == 1;
        if (square != (filter == PrimeFilter::SquareDeterminant)) continue;
      }
      FiniteField F = prime.residue_field();
      FFElem jr;
      try {
        jr = reduce(j0, prime, F);
      } catch (const Error&) {
        ++prof.skipped;
        continue;
      }
      if (F.is_zero(jr) || jr == F.from_int(1728)) {
        ++prof.skipped;
        continue;
      }
      FFPoly f = specialize_mod_p(P, F, jr);
      if (arith::poly::degree<FiniteField>(f) != deg || !arith::is_squarefree_poly(F, f)) {
        ++prof.skipped;
        continue;
      }
      auto shape = arith::distinct_degree_shape(F, f);
      std::sort(shape.begin(), shape.end());
      ++prof.histogram[shape];
      ++prof.samples;
    }
  }
  return prof;
}

namespace {

struct Candidate {
  group::GroupLabel label;
  group::ProjSubgroup H;
  std::set<std::vector<int>> types;
  bool common_fixed_point;
};

bool has_common_fixed_point(const group::ProjSubgroup& H) {
  for (int p = 0; p <= H.l(); ++p) {
    bool all = true;
    for (const auto& g : H.generators())
      if (group::act(g, p) != p) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

std::vector<uint64_t> key_set(const group::ProjSubgroup& H) {
  std::vector<uint64_t> k;
  for (const auto& g : H.elements()) k.push_back(g.key());
  std::sort(k.begin(), k.end());
  return k;
}

std::vector<Candidate> catalogue(int l) {
  using group::GroupLabel;
  using group::ProjMat;
  std::vector<Candidate> out;
  std::set<std::vector<uint64_t>> seen;
  auto add = [&](const GroupLabel& label, group::ProjSubgroup H) {
    auto k = key_set(H);
    if (!seen.insert(k).second) return;
    auto ts = group::cycle_type_set(H);
    bool fixed = has_common_fixed_point(H);
    out.push_back({label, std::move(H), {ts.begin(), ts.end()}, fixed});
  };

  const auto G = group::all_elements(l, false);
  std::vector<ProjMat> involutions;
  for (const auto& g : G)
    if (g.order() == 2) involutions.push_back(g);

  std::vector<std::pair<ProjMat, group::ProjSubgroup>> cyclics;
  for (const auto& g : G) {
    auto C = group::closure(l, {g}, static_cast<size_t>(l + 1));
    auto k = key_set(C);
    if (seen.count(k)) continue;
    add(GroupLabel::cyclic(static_cast<int>(C.order())), C);
    cyclics.emplace_back(g, C);
  }
  for (const auto& [g, C] : cyclics) {
    const int m = static_cast<int>(C.order());
    if (m < 2) continue;
    for (const auto& s : involutions) {
      if (C.contains(s) || !((s * g) * (s * g)).is_identity()) continue;
      auto D = group::try_closure(l, {g, s}, static_cast<size_t>(2 * m));
      if (D && static_cast<int>(D->order()) == 2 * m) add(GroupLabel::dihedral(2 * m), *D);
    }
  }
  for (auto label : {GroupLabel::a4(), GroupLabel::s4(), GroupLabel::a5()}) {
    try {
      add(label, group::find_subgroup(l, label, 1, 400000, {false, std::nullopt}));
    } catch (const Error&) {
    }
  }
  add(group::classify(group::borel(l)), group::borel(l));
  add({GroupLabel::Kind::ContainsPSL, static_cast<int>(group::pgl2_order(l) / 2)}, group::psl2(l));
  add({GroupLabel::Kind::ContainsPSL, static_cast<int>(group::pgl2_order(l))}, group::pgl2(l));
  return out;
}

}  // namespace

std::vector<group::GroupLabel> image_candidates(const CycleProfile& profile, const CandidateOptions& opts) {
  if (profile.samples < opts.min_samples)
    fail(ErrorCode::InsufficientSamples, "need at least " + std::to_string(opts.min_samples) + " samples, have " +
                                             std::to_string(profile.samples));
  const auto support = profile.support();
  std::vector<const Candidate*> kept;
  const auto cat = catalogue(profile.l);
  for (const auto& c : cat) {
    if (opts.require_no_fixed_point && c.common_fixed_point) continue;
    bool covers = std::all_of(support.begin(), support.end(), [&](const auto& t) { return c.types.count(t) > 0; });
    if (covers) kept.push_back(&c);
  }
  // Filtering only sees (label, cycle types, fixed point), so keep one
  // representative per such key, then drop any group containing a conjugate
  // of a smaller survivor.
  std::map<std::tuple<group::GroupLabel, std::set<std::vector<int>>, bool>, const Candidate*> reps;
  for (const auto* c : kept) reps.emplace(std::make_tuple(c->label, c->types, c->common_fixed_point), c);
  kept.clear();
  for (const auto& [k, c] : reps) kept.push_back(c);
  std::sort(kept.begin(), kept.end(), [](auto* a, auto* b) { return a->H.order() < b->H.order(); });
  const auto G = group::all_elements(profile.l, false);
  auto contains_conjugate = [&](const Candidate* big, const Candidate* small) {
    if (small->H.order() >= big->H.order() || big->H.order() % small->H.order() != 0) return false;
    for (const auto& g : G) {
      const auto gi = g.inverse();
      bool inside = true;
      for (const auto& h : small->H.generators())
        if (!big->H.contains(g * h * gi)) {
          inside = false;
          break;
        }
      if (inside) return true;
    }
    return false;
  };
  std::vector<const Candidate*> minimal;
  for (const auto* c : kept) {
    bool contains_smaller =
        std::any_of(minimal.begin(), minimal.end(), [&](const Candidate* m) { return contains_conjugate(c, m); });
    if (!contains_smaller) minimal.push_back(c);
  }
  std::set<group::GroupLabel> labels;
  for (const auto* c : minimal) labels.insert(c->label);
  return {labels.begin(), labels.end()};
}

nlohmann::json RootSearch::to_json() const {
  nlohmann::json r = nlohmann::json::array();
  for (const auto& x : roots) r.push_back(to_string(x));
  return {{"status", found() ? "Found" : "NoneUpToHeight"}, {"roots", r}, {"height_bound", height_bound.get_str()}};
}

namespace {

using numeric::Complex;
using numeric::Real;

size_t bit_height(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

unsigned choose_digits(size_t coeff_bits, const Integer& H) {
  double need = static_cast<double>(coeff_bits) * 0.30103 +
                4.0 * static_cast<double>(mpz_sizeinbase(H.get_mpz_t(), 10)) + 40.0;
  unsigned d = 64;
  while (d < need && d < 4096) d *= 2;
  return d;
}

// Last convergent of x within the height bound, if it is close to x.
std::optional<Rational> recognize(const Real& x, const Integer& H) {
  auto cs = numeric::convergents(x, H);
  if (cs.empty()) return std::nullopt;
  const Rational& c = cs.back();
  Real err = abs(x - numeric::to_real(c));
  Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) / 3);
  if (err > tol * std::max(Real(1), abs(x))) return std::nullopt;
  return c;
}

template <class F, class Embed>
std::vector<std::vector<Complex>> embedded_roots(const arith::Poly<F>& f, int embeddings, Embed embed) {
  std::vector<std::vector<Complex>> out;
  for (int e = 0; e < embeddings; ++e) {
    std::vector<Complex> c;
    for (const auto& x : f) c.push_back(embed(x, e));
    auto r = numeric::polynomial_roots(c);
    if (!r) return {};
    out.push_back(*r);
  }
  return out;
}

template <class F>
arith::Poly<F> squarefree_part(const F& f, const arith::Poly<F>& p) {
  auto g = arith::poly::gcd(f, p, arith::poly::derivative(f, p));
  return arith::poly::monic(f, arith::poly::divmod(f, p, g).first);
}

}  // namespace

RootSearch root_in_field(const IsogenyPolynomial& P, const KValue& j0, const Integer& height_bound) {
  RootSearch out;
  out.height_bound = height_bound;
  const int64_t d = field_d(j0);
  auto is_real = [](const Complex& z) {
    Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) / 2);
    return abs(z.im) <= tol * std::max(Real(1), abs(z.re));
  };

  if (d == 0) {
    RationalField Q;
    auto f = P.poly.specialize_y(Q, std::get<Rational>(j0));
    if (arith::poly::degree<RationalField>(f) < 1) return out;
    f = squarefree_part(Q, f);
    size_t bits = 0;
    for (const auto& c : f) bits = std::max(bits, bit_height(c));
    std::set<Rational> found;
    if (f.size() == 2) {
      found.insert(-f[0]);
    } else {
      for (unsigned digits = choose_digits(bits, height_bound);; digits *= 2) {
        numeric::PrecisionScope scope(digits);
        auto roots = embedded_roots<RationalField>(f, 1, [](const Rational& x, int) {
          return Complex{numeric::to_real(x), 0};
        });
        if (roots.empty()) {
          if (digits >= 4096) fail(ErrorCode::PrecisionExhausted, "root isolation did not converge");
          continue;
        }
        for (const auto& z : roots[0]) {
          if (!is_real(z)) continue;
          auto a = recognize(z.re, height_bound);
          if (a && arith::poly::eval(Q, f, *a) == 0) found.insert(*a);
        }
        break;
      }
    }
    for (const auto& r : found) out.roots.push_back(r);
    return out;
  }

  QuadField K(d);
  const QuadElem jq = std::get<QuadElem>(promote(j0, d));
  auto f = P.poly.specialize_y(K, jq);
  if (arith::poly::degree<QuadField>(f) < 1) return out;
  f = squarefree_part(K, f);
  std::vector<QuadElem> found;
  auto note = [&](const QuadElem& x) {
    if (std::find(found.begin(), found.end(), x) == found.end()) found.push_back(x);
  };
  if (f.size() == 2) {
    note(K.neg(f[0]));
  } else {
    size_t bits = 0;
    for (const auto& c : f) bits = std::max({bits, bit_height(c.a()), bit_height(c.b())});
    for (unsigned digits = choose_digits(bits, height_bound);; digits *= 2) {
      numeric::PrecisionScope scope(digits);
      const Real sq = sqrt(Real(d > 0 ? d : -d));
      auto embed = [&](const QuadElem& x, int e) {
        Real a = numeric::to_real(x.a()), b = numeric::to_real(x.b());
        if (d > 0) return Complex{a + (e == 0 ? sq : -sq) * b, 0};
        return Complex{a, sq * b};
      };
      auto roots = embedded_roots<QuadField>(f, d > 0 ? 2 : 1, embed);
      if (roots.empty()) {
        if (digits >= 4096) fail(ErrorCode::PrecisionExhausted, "root isolation did not converge");
        continue;
      }
      auto try_candidate = [&](const Real& a_approx, const Real& b_approx) {
        auto a = recognize(a_approx, height_bound);
        auto b = recognize(b_approx, height_bound);
        if (!a || !b) return;
        QuadElem x(d, *a, *b);
        if (K.is_zero(arith::poly::eval(K, f, x))) note(x);
      };
      if (d > 0) {
        for (const auto& z : roots[0]) {
          if (!is_real(z)) continue;
          for (const auto& w : roots[1]) {
            if (!is_real(w)) continue;
            try_candidate((z.re + w.re) / 2, (z.re - w.re) / (2 * sq));
          }
        }
      } else {
        for (const auto& z : roots[0]) try_candidate(z.re, z.im / sq);
      }
      break;
    }
  }
  for (const auto& r : found) out.roots.push_back(r);
  return out;
}

}  // namespace isoscope::modpoly
