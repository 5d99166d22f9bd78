// isoscope command line. Exit codes: 0 success, 1 verification failure or
// computation error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoscope.h"

namespace {

const std::vector<std::string> kChecks{"xs413", "points", "cusps",          "zeros",   "smooth",    "brauer", "prop71",
                                       "hauptmodul", "sutherland", "xsplit5-family", "modpoly", "s4-curves", "groups"};

int report_error(isoscope_status st) {
  std::string msg = isoscope_last_error();
  std::string escaped;
  for (char c : msg) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  std::fprintf(stderr, "{\"schema_version\": %d, \"error\": \"%s\", \"message\": \"%s\"}\n", ISOSCOPE_SCHEMA_VERSION,
               isoscope_status_name(st), escaped.c_str());
  const bool usage = st == ISOSCOPE_E_INVALID_ARGUMENT || st == ISOSCOPE_E_PARSE || st == ISOSCOPE_E_SPECIAL_J;
  return usage ? 2 : 1;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text << '\n';
  return static_cast<bool>(out);
}

// Prints (and optionally saves) the result; returns the exit code. `r` is taken
// by reference so emit(isoscope_x(..., &r), r) sees the filled handle.
int emit(isoscope_status st, isoscope_result*& r, const std::string& save = {}) {
  if (st != ISOSCOPE_OK) return report_error(st);
  std::string text = isoscope_result_json(r);
  int pass = isoscope_result_pass(r);
  isoscope_result_free(r);
  r = nullptr;
  std::cout << text << std::endl;
  if (!save.empty() && !write_file(save, text)) {
    std::fprintf(stderr, "cannot write %s\n", save.c_str());
    return 1;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-global l-isogeny testing and modular-curve model checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isoscope_version()));

  int ell = 7;
  std::string field = "Q", j, height = "1000", json_out;
  uint64_t pmax = 10000, seed = 0;
  auto* scan = app.add_subcommand("scan", "Test (l, j0) for local isogenies everywhere without a global one");
  scan->add_option("--ell", ell, "odd prime l <= 13")->required();
  scan->add_option("--field", field, "Q or Q(sqrt(d))");
  scan->add_option("--j", j, "j-invariant, e.g. 2268945/128 or 1+3*sqrt(5)")->required();
  scan->add_option("--pmax", pmax, "norm bound for sampled primes")->check(CLI::Range(uint64_t{5}, uint64_t{1000000}));
  scan->add_option("--height", height, "height bound for the global root search");
  scan->add_option("--seed", seed);
  scan->add_option("--json", json_out, "also write the report to this file");

  std::string s;
  auto* x5 = app.add_subcommand("xsplit5", "Exceptionality test for a point of X_split(5) over Q(sqrt 5)");
  x5->add_option("--s", s, "parameter in Q(sqrt 5), e.g. 3*r5+1")->required();

  std::string check;
  auto* verify = app.add_subcommand("verify", "Run a named verification");
  std::vector<std::string> names = kChecks;
  names.push_back("all");
  verify->add_option("check", check, "which check")->required()->check(CLI::IsMember(names));

  std::string out_path;
  bool do_verify = false;
  int precision = 30;
  auto* mp = app.add_subcommand("modpoly", "Compute the classical modular polynomial Phi_l");
  mp->add_option("--ell", ell, "l in {2, 3, 5, 7, 11, 13}")->required();
  mp->add_option("--out", out_path, "write the polynomial as JSON");
  mp->add_flag("--verify", do_verify, "check against q-expansions and the congruence mod l");
  mp->add_option("--precision", precision, "q-adic precision for --verify")->check(CLI::Range(10, 400));

  int64_t disc = 1;
  int sheight = 10;
  auto* x11 = app.add_subcommand("xsplit11", "Small points on the genus-2 model of X_split(11)");
  x11->add_option("--disc", disc, "field parameter d (1 for Q)");
  x11->add_option("--height", sheight)->check(CLI::Range(1, 200));

  std::string jfile;
  auto* c11 = app.add_subcommand("conj11", "Linear-factor density of Phi_11(X, j0) for supplied j0");
  c11->add_option("--j-file", jfile, "JSON file with an entries array")->required()->check(CLI::ExistingFile);
  c11->add_option("--pmax", pmax, "norm bound")->check(CLI::Range(uint64_t{5}, uint64_t{1000000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  isoscope_result* r = nullptr;
  if (*scan) return emit(isoscope_scan(ell, field.c_str(), j.c_str(), pmax, height.c_str(), seed, &r), r, json_out);
  if (*x5) return emit(isoscope_xsplit5(s.c_str(), &r), r);
  if (*verify) {
    if (check != "all") return emit(isoscope_verify(check.c_str(), &r), r);
    int rc = 0;
    for (const auto& name : kChecks) rc = std::max(rc, emit(isoscope_verify(name.c_str(), &r), r));
    return rc;
  }
  if (*mp) {
    isoscope_modpoly* p = nullptr;
    isoscope_status st = isoscope_modpoly_compute(ell, &p);
    if (st != ISOSCOPE_OK) return report_error(st);
    int ok = 1;
    if (do_verify && (st = isoscope_modpoly_verify(p, precision, &ok)) != ISOSCOPE_OK) {
      isoscope_modpoly_free(p);
      return report_error(st);
    }
    st = isoscope_modpoly_json(p, &r);
    isoscope_modpoly_free(p);
    if (st != ISOSCOPE_OK) return report_error(st);
    std::string text = isoscope_result_json(r);
    isoscope_result_free(r);
    if (!out_path.empty() && !write_file(out_path, text)) {
      std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
      return 1;
    }
    // With --out the polynomial goes to the file and stdout gets a summary.
    auto doc = nlohmann::json::parse(text);
    nlohmann::json verified = do_verify ? nlohmann::json(ok != 0) : nlohmann::json();
    if (out_path.empty()) {
      doc["verified"] = verified;
      doc["precision"] = precision;
      std::cout << doc.dump(2) << std::endl;
    } else {
      nlohmann::json summary{{"schema_version", ISOSCOPE_SCHEMA_VERSION}, {"l", ell}, {"terms", doc["terms"].size()},
                             {"verified", verified}, {"precision", precision}, {"out", out_path}};
      std::cout << summary.dump(2) << std::endl;
    }
    return ok ? 0 : 1;
  }
  if (*x11) return emit(isoscope_xsplit11(disc, sheight, &r), r);
  if (*c11) {
    std::ifstream in(jfile);
    std::stringstream buf;
    buf << in.rdbuf();
    return emit(isoscope_conj11(buf.str().c_str(), pmax, &r), r);
  }
  return 2;
}
