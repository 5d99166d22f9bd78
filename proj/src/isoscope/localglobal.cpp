#include "isoscope/localglobal.hpp"

#include <mutex>

#include "isoscope/elliptic.hpp"

namespace isoscope::lg {

using arith::FiniteField;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CandidateExceptional: return "CandidateExceptional";
    case Verdict::NotExceptional: return "NotExceptional";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const modpoly::IsogenyPolynomial& classical_polynomial(int l) {
  static std::mutex mu;
  static std::map<int, modpoly::IsogenyPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, modpoly::compute_phi(l)).first;
  return it->second;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& g : image_candidates) cands.push_back(g.to_string() == "ContainsPSL" || g.to_string() == "Other"
                                                            ? g.to_string() + "(" + std::to_string(g.order) + ")"
                                                            : g.to_string());
  nlohmann::json o{
      {"l", cfg.l},
      {"field", cfg.d == 0 ? "Q" : "Q(sqrt(" + std::to_string(cfg.d) + "))"},
      {"j0", isoscope::to_string(cfg.j0)},
      {"prime_bound", cfg.prime_bound},
      {"height_bound", cfg.height_bound.get_str()},
      {"primes_sampled", primes_sampled},
      {"primes_skipped", primes_skipped},
      {"counterexamples", counterexamples},
      {"counterexample_norms", counterexample_norms},
      {"local_success_fraction", local_success_fraction.get_str()},
      {"global_root", global_root_found() ? "Found" : "NoneUpToHeight"},
      {"phi_root", phi_root.to_json()},
      {"phi_frobenius_agreement", {{"compared", phi_compared}, {"disagreements", phi_disagreements}}},
      {"cycle_profile", profile.to_json()},
      {"image_candidates", cands},
      {"verdict", to_string(verdict)},
      {"notes", notes},
  };
  if (fiber_root) {
    o["fiber_root"] = fiber_root->to_json();
    o["fiber_agreement"] = {{"compared", fiber_compared}, {"disagreements", fiber_disagreements}};
  }
  return o;
}

ScanReport scan(const ScanConfig& cfg) {
  if (cfg.l < 3 || cfg.l > 13 || !arith::is_prime_u64(static_cast<uint64_t>(cfg.l)))
    fail(ErrorCode::InvalidArgument, "scan supports odd primes l <= 13");
  if (cfg.prime_bound > 1000000) fail(ErrorCode::InvalidArgument, "prime_bound must be <= 10^6");
  const KValue j0 = promote(cfg.j0, cfg.d);
  if (auto r = as_rational(j0); r && (*r == 0 || *r == 1728)) fail(ErrorCode::SpecialJ, "j = 0 and j = 1728 are excluded");

  ScanReport rep;
  rep.cfg = cfg;
  rep.cfg.j0 = j0;
  const auto& phi = classical_polynomial(cfg.l);
  const auto fiber = modpoly::fiber_polynomial(cfg.l);
  const uint64_t l = static_cast<uint64_t>(cfg.l);

  for (uint64_t p : arith::primes_up_to(cfg.prime_bound)) {
    if (p <= 3 || p == l) continue;
    if (cfg.d != 0 && arith::legendre(cfg.d, p) == 0) {
      ++rep.primes_skipped;
      continue;
    }
    for (const auto& P : ec::primes_above(cfg.d, p)) {
      if (P.norm() > cfg.prime_bound) continue;
      const FiniteField F = P.residue_field();
      arith::FFElem jr;
      try {
        jr = reduce(j0, P, F);
      } catch (const Error&) {
        ++rep.primes_skipped;
        continue;
      }
      if (F.is_zero(jr) || jr == F.from_int(1728)) {
        ++rep.primes_skipped;
        continue;
      }
      const auto E = ec::curve_from_j(F, jr);
      const auto fr = ec::point_count(E);
      const bool local = ec::local_isogeny_exists(fr, l);
      ++rep.primes_sampled;
      if (!local) {
        ++rep.counterexamples;
        if (rep.counterexample_norms.size() < 20) rep.counterexample_norms.push_back(P.norm());
      }
      auto f = modpoly::specialize_mod_p(phi, F, jr);
      const bool phi_sf = arith::is_squarefree_poly(F, f);
      if (phi_sf) {
        ++rep.phi_compared;
        if (arith::has_root(F, f) != local) ++rep.phi_disagreements;
      }
      if (fiber) {
        auto g = modpoly::specialize_mod_p(*fiber, F, jr);
        if (phi_sf && arith::is_squarefree_poly(F, g)) {
          ++rep.fiber_compared;
          if (arith::has_root(F, g) != arith::has_root(F, f)) ++rep.fiber_disagreements;
        }
      }
    }
  }
  rep.local_success_fraction =
      rep.primes_sampled ? arith::make_rational(rep.primes_sampled - rep.counterexamples, rep.primes_sampled) : Rational(0);

  rep.phi_root = modpoly::root_in_field(phi, j0, cfg.height_bound);
  if (fiber) rep.fiber_root = modpoly::root_in_field(*fiber, j0, cfg.height_bound);

  if (rep.global_root_found() && rep.counterexamples > 0)
    fail(ErrorCode::InvalidArgument, "consistency violation: a global root exists but some prime has no local isogeny");

  if (rep.global_root_found()) {
    rep.verdict = Verdict::NotExceptional;
    rep.notes.push_back("global root found: a K-rational l-isogeny exists");
  } else if (rep.counterexamples > 0) {
    rep.verdict = Verdict::NotExceptional;
    rep.notes.push_back("some sampled prime has no local l-isogeny");
  } else if (rep.primes_sampled == 0) {
    rep.verdict = Verdict::Inconclusive;
    rep.notes.push_back("no primes sampled");
  } else {
    rep.verdict = Verdict::CandidateExceptional;
  }
  if (cfg.l == 3 && rep.verdict == Verdict::CandidateExceptional) {
    rep.verdict = Verdict::Inconclusive;
    rep.notes.push_back("l = 3 can be ruled out by group theory: no Hasse subgroup exists in PGL_2(F_3)");
  }

  rep.profile = modpoly::cycle_profile(phi, j0, cfg.prime_bound);
  try {
    modpoly::CandidateOptions opts;
    opts.require_no_fixed_point = rep.verdict == Verdict::CandidateExceptional;
    rep.image_candidates = modpoly::image_candidates(rep.profile, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientSamples) throw;
    rep.notes.push_back(std::string("image candidates skipped: ") + e.what());
  }
  return rep;
}

bool david_bound_filter(int l, const group::GroupLabel& label, int e) {
  using K = group::GroupLabel::Kind;
  int m = 0;
  switch (label.kind) {
    case K::A4: m = 3; break;
    case K::S4: m = 4; break;
    case K::A5: m = 5; break;
    default: fail(ErrorCode::InvalidArgument, "the element-order bound applies to A4, S4, A5");
  }
  if (e != 1 && e != 2) fail(ErrorCode::InvalidArgument, "ramification index must be 1 or 2");
  return 4 * e * m >= l - 1;
}

std::map<std::string, std::vector<int>> nondihedral_quadratic_classification(int search_limit) {
  std::map<std::string, std::vector<int>> out;
  for (auto label : {group::GroupLabel::a4(), group::GroupLabel::s4(), group::GroupLabel::a5()}) {
    auto& v = out[label.to_string()];
    for (uint64_t p : arith::primes_up_to(static_cast<uint64_t>(search_limit))) {
      if (p < 5) continue;
      const int l = static_cast<int>(p);
      if (group::congruence_prediction(label, l, false) && david_bound_filter(l, label, 2)) v.push_back(l);
    }
  }
  return out;
}

nlohmann::json Conj11Result::to_json() const {
  return {{"label", entry.label},
          {"field", entry.d == 0 ? "Q" : "Q(sqrt(" + std::to_string(entry.d) + "))"},
          {"j0", isoscope::to_string(entry.j0)},
          {"primes", primes},
          {"with_linear_factor", with_linear_factor},
          {"fraction", fraction()},
          {"global", global.to_json()},
          {"density_one_like", density_one_like},
          {"conjecture_consistent", conjecture_consistent}};
}

std::vector<Conj11Result> conjecture11_evidence(const std::vector<Conj11Entry>& js, uint64_t prime_bound,
                                                const Integer& height_bound) {
  const auto& phi = classical_polynomial(11);
  std::vector<Conj11Result> out;
  for (const auto& e : js) {
    Conj11Result r;
    r.entry = e;
    const KValue j0 = promote(e.j0, e.d);
    for (uint64_t p : arith::primes_up_to(prime_bound)) {
      if (p <= 3 || p == 11 || (e.d != 0 && arith::legendre(e.d, p) == 0)) continue;
      for (const auto& P : ec::primes_above(e.d, p)) {
        if (P.norm() > prime_bound) continue;
        const FiniteField F = P.residue_field();
        arith::FFElem jr;
        try {
          jr = reduce(j0, P, F);
        } catch (const Error&) {
          continue;
        }
        if (F.is_zero(jr) || jr == F.from_int(1728)) continue;
        ++r.primes;
        if (arith::has_root(F, modpoly::specialize_mod_p(phi, F, jr))) ++r.with_linear_factor;
      }
    }
    r.global = modpoly::root_in_field(phi, j0, height_bound);
    r.density_one_like = r.primes >= 100 && r.fraction() >= 0.95;
    r.conjecture_consistent = r.primes >= 100 && r.fraction() < 0.95 && !r.global.found();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Conj11Entry> parse_conj11_file(const nlohmann::json& j) {
  if (!j.contains("entries") || !j["entries"].is_array()) fail(ErrorCode::ParseError, "expected an \"entries\" array");
  std::vector<Conj11Entry> out;
  for (const auto& e : j["entries"]) {
    Conj11Entry c;
    c.label = e.value("label", "");
    c.d = parse_field(e.value("field", "Q"));
    c.j0 = parse_kvalue(e.at("j").get<std::string>(), c.d);
    out.push_back(std::move(c));
  }
  return out;
}

bool sqrt_lstar_in_field(int l, int64_t d) {
  if (l < 3 || l % 2 == 0) fail(ErrorCode::InvalidArgument, "l must be an odd prime");
  const int64_t lstar = (l % 4 == 1) ? l : -l;
  if (d == 0 || d == 1) return false;
  return arith::squarefree_part(d) == arith::squarefree_part(lstar);
}

}  // namespace isoscope::lg
