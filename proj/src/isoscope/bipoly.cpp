#include "isoscope/bipoly.hpp"

#include <algorithm>

#include "isoscope/error.hpp"

namespace isoscope::arith {

void BiPoly::add_term(int i, int j, const Integer& c) {
  if (i < 0 || j < 0) fail(ErrorCode::InvalidArgument, "negative exponent in bivariate polynomial");
  if (c == 0) return;
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(Key{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
  return r;
}

std::vector<Integer> BiPoly::x_coeff(int i) const {
  std::vector<Integer> r(std::max(degree_y() + 1, 0));
  for (const auto& [k, c] : terms_)
    if (k.first == i) r[k.second] = c;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

nlohmann::json BiPoly::to_json(int l) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_) terms.push_back({k.first, k.second, c.get_str()});
  return {{"l", l}, {"terms", terms}};
}

BiPoly BiPoly::from_json(const nlohmann::json& j, int* l) {
  try {
    if (l) *l = j.at("l").get<int>();
    BiPoly r;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) fail(ErrorCode::ParseError, "polynomial term must be [i, j, \"coeff\"]");
      Integer c;
      if (c.set_str(t[2].get<std::string>(), 10) != 0) fail(ErrorCode::ParseError, "bad coefficient " + t[2].dump());
      r.add_term(t[0].get<int>(), t[1].get<int>(), c);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace isoscope::arith
