#include "isoscope.h"

#include <functional>
#include <map>
#include <string>

#include "isoscope/checks.hpp"
#include "isoscope/error.hpp"
#include "isoscope/localglobal.hpp"
#include "isoscope/modcurves.hpp"

struct isoscope_result {
  std::string json;
  bool pass = false;
};

struct isoscope_modpoly {
  isoscope::modpoly::IsogenyPolynomial poly;
};

namespace {

using namespace isoscope;
using nlohmann::json;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::Io) == ISOSCOPE_E_IO);
static_assert(static_cast<int>(ErrorCode::SpecialJ) == ISOSCOPE_E_SPECIAL_J);

template <class Fn>
isoscope_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return ISOSCOPE_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<isoscope_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return ISOSCOPE_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return ISOSCOPE_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

isoscope_result* make_result(json body, bool pass) {
  body["schema_version"] = ISOSCOPE_SCHEMA_VERSION;
  return new isoscope_result{body.dump(2), pass};
}

isoscope_result* from_check(const checks::Check& c) { return make_result(c.to_json(), c.pass); }

isoscope_result* from_check(const curves::CheckResult& c) { return make_result(c.to_json(), c.pass); }

const std::map<std::string, std::function<isoscope_result*()>>& verifiers() {
  static const std::map<std::string, std::function<isoscope_result*()>> table{
      {"xs413", [] { return from_check(checks::xs413_models()); }},
      {"points", [] { return from_check(curves::xs413_verify_points()); }},
      {"cusps", [] { return from_check(curves::xs413_verify_cusps()); }},
      {"zeros", [] { return from_check(curves::xs413_verify_zeros()); }},
      {"smooth",
       [] {
         json primes = json::object();
         bool any = false;
         for (uint64_t p : {2, 3, 5, 7}) {
           bool s = curves::xs413_smooth(p);
           primes[std::to_string(p)] = s;
           any |= s;
         }
         return make_result({{"check", "smooth"}, {"status", any ? "pass" : "fail"}, {"smooth_mod_p", primes}}, any);
       }},
      {"brauer", [] { return from_check(checks::brauer()); }},
      {"prop71", [] { return from_check(checks::hasse_vs_congruence()); }},
      {"hauptmodul", [] { return from_check(checks::hauptmodul()); }},
      {"sutherland", [] { return from_check(checks::sutherland_pair()); }},
      {"xsplit5-family", [] { return from_check(checks::xsplit5_family()); }},
      {"modpoly", [] { return from_check(checks::modular_polynomials(true)); }},
      {"s4-curves", [] { return from_check(checks::s4_curves_at_13()); }},
      {"groups", [] { return from_check(checks::group_suite()); }},
  };
  return table;
}

}  // namespace

extern "C" {

const char* isoscope_version(void) { return "1.0.0"; }

const char* isoscope_status_name(isoscope_status status) {
  if (status == ISOSCOPE_OK) return "Ok";
  if (status == ISOSCOPE_E_INTERNAL) return "Internal";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* isoscope_last_error(void) { return last_error.c_str(); }

const char* isoscope_result_json(const isoscope_result* r) { return r ? r->json.c_str() : ""; }

int isoscope_result_pass(const isoscope_result* r) { return r && r->pass ? 1 : 0; }

void isoscope_result_free(isoscope_result* r) { delete r; }

isoscope_status isoscope_scan(int ell, const char* field, const char* j, uint64_t prime_bound, const char* height,
                              uint64_t seed, isoscope_result** out) {
  return guarded([&] {
    require(field, "field");
    require(j, "j");
    require(height, "height");
    require(out, "out");
    lg::ScanConfig cfg;
    cfg.l = ell;
    cfg.d = parse_field(field);
    cfg.j0 = parse_kvalue(j, cfg.d);
    cfg.prime_bound = prime_bound;
    try {
      cfg.height_bound = arith::Integer(height);
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, std::string("bad height bound: ") + height);
    }
    cfg.seed = seed;
    auto report = lg::scan(cfg);
    *out = make_result(report.to_json(), true);
  });
}

isoscope_status isoscope_xsplit5(const char* s, isoscope_result** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    auto v = parse_kvalue(s, 5);
    auto z = std::get<arith::QuadElem>(promote(v, 5));
    auto report = curves::xsplit5_is_exceptional(z);
    json body = report.to_json();
    if (report.verdict != curves::Xsplit5Verdict::Pole) body["j"] = curves::xsplit5_j(z).to_string();
    *out = make_result(body, true);
  });
}

isoscope_status isoscope_verify(const char* name, isoscope_result** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto& table = verifiers();
    auto it = table.find(name);
    if (it == table.end()) fail(ErrorCode::InvalidArgument, std::string("unknown check: ") + name);
    *out = it->second();
  });
}

isoscope_status isoscope_modpoly_compute(int ell, isoscope_modpoly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new isoscope_modpoly{lg::classical_polynomial(ell)};
  });
}

isoscope_status isoscope_modpoly_verify(const isoscope_modpoly* p, int precision, int* ok) {
  return guarded([&] {
    require(p, "modpoly");
    require(ok, "ok");
    *ok = modpoly::verify_phi(p->poly, precision) && modpoly::kronecker_congruence(p->poly);
  });
}

isoscope_status isoscope_modpoly_json(const isoscope_modpoly* p, isoscope_result** out) {
  return guarded([&] {
    require(p, "modpoly");
    require(out, "out");
    *out = make_result(p->poly.poly.to_json(p->poly.l), true);
  });
}

void isoscope_modpoly_free(isoscope_modpoly* p) { delete p; }

isoscope_status isoscope_xsplit11(int64_t d, int height, isoscope_result** out) {
  return guarded([&] {
    require(out, "out");
    json pts = json::array();
    for (const auto& p : curves::xsplit11_search(d, height)) pts.push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}});
    json body{{"curve", "y^2 = 4x^6 - 4x^4 - 2x^3 + 2x^2 + 3/2x + 1/4"}, {"d", d}, {"height", height}, {"points", pts}};
    *out = make_result(body, true);
  });
}

isoscope_status isoscope_conj11(const char* json_text, uint64_t prime_bound, isoscope_result** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    json in;
    try {
      in = json::parse(json_text);
    } catch (const json::parse_error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    json rows = json::array();
    for (const auto& r : lg::conjecture11_evidence(lg::parse_conj11_file(in), prime_bound)) rows.push_back(r.to_json());
    *out = make_result({{"prime_bound", prime_bound}, {"threshold", 0.95}, {"evidence", rows}}, true);
  });
}

}  // extern "C"
