// One line per acceptance criterion; exit status is the number of failures.

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "isoscope/checks.hpp"
#include "isoscope/error.hpp"

using isoscope::checks::Check;

namespace {

std::vector<isoscope::lg::Conj11Entry> load_js() {
  std::ifstream in(std::string(ISOSCOPE_DATA_DIR) + "/conj11_js.json");
  return isoscope::lg::parse_conj11_file(nlohmann::json::parse(in));
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"sutherland pair (l=7, j=2268945/128)", [] { return isoscope::checks::sutherland_pair(); }},
      {"X_split(5) family over Q(sqrt 5)", [] { return isoscope::checks::xsplit5_family(); }},
      {"Hasse subgroups vs congruence prediction", [] { return isoscope::checks::hasse_vs_congruence(); }},
      {"X_S4(13) model verification", [] { return isoscope::checks::xs413_models(); }},
      {"modular polynomials", [] { return isoscope::checks::modular_polynomials(true); }},
      {"S4/A4 Frobenius cycle types at 13", [] { return isoscope::checks::s4_curves_at_13(); }},
      {"permutation character identity", [] { return isoscope::checks::brauer(); }},
      {"PGL_2 group-theory suite", [] { return isoscope::checks::group_suite(); }},
      {"X_split(11) harness", [] { return isoscope::checks::xsplit11_harness(load_js()); }},
  };
  int failures = 0, n = 0;
  for (const auto& [title, run] : criteria) {
    ++n;
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.summary = std::string("exception: ") + e.what();
    }
    failures += !c.pass;
    std::printf("[%s] %d. %s: %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", n, title.c_str(), c.summary.c_str(),
                c.seconds);
    if (verbose || !c.pass) std::printf("%s\n", c.to_json().dump(2).c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures;
}
