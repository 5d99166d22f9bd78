#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "isoscope/integer.hpp"
#include "isoscope/upoly.hpp"

namespace isoscope::arith {

/// Sparse integer polynomial in X, Y; zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_X, deg_Y)

  void add_term(int i, int j, const Integer& c);
  Integer coeff(int i, int j) const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int degree_x() const;
  int degree_y() const;
  BiPoly swapped() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Coefficient of X^i as a polynomial in Y (low to high).
  std::vector<Integer> x_coeff(int i) const;

  /// P(X, y0) as a univariate polynomial over the field of y0.
  template <Field F>
  Poly<F> specialize_y(const F& f, const typename F::Elem& y0) const {
    const int dx = degree_x(), dy = degree_y();
    std::vector<typename F::Elem> ypow{f.one()};
    for (int k = 1; k <= dy; ++k) ypow.push_back(f.mul(ypow.back(), y0));
    Poly<F> r(dx + 1, f.zero());
    for (const auto& [key, c] : terms_) r[key.first] = f.add(r[key.first], f.mul(f.from_integer(c), ypow[key.second]));
    poly::trim(f, r);
    return r;
  }

  template <Field F>
  typename F::Elem eval(const F& f, const typename F::Elem& x0, const typename F::Elem& y0) const {
    return poly::eval(f, specialize_y(f, y0), x0);
  }

  // {"l": l, "terms": [[i, j, "c"], ...]} sorted by (i, j).
  nlohmann::json to_json(int l) const;
  static BiPoly from_json(const nlohmann::json& j, int* l = nullptr);

 private:
  std::map<Key, Integer> terms_;
};

}  // namespace isoscope::arith
