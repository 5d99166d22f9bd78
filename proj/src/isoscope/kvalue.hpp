#pragma once

// A number in Q or in a quadratic field Q(sqrt d), the only base fields the
// scanner works over.

#include <optional>
#include <string>
#include <variant>

#include "isoscope/elliptic.hpp"
#include "isoscope/quadratic.hpp"

namespace isoscope {

using KValue = std::variant<arith::Rational, arith::QuadElem>;

// 0 for Q.
inline int64_t field_d(const KValue& v) {
  return std::holds_alternative<arith::QuadElem>(v) ? std::get<arith::QuadElem>(v).d() : 0;
}

inline std::string to_string(const KValue& v) {
  if (auto* q = std::get_if<arith::Rational>(&v)) return q->get_str();
  return std::get<arith::QuadElem>(v).to_string();
}

inline bool is_rational_value(const KValue& v) {
  return std::holds_alternative<arith::Rational>(v) || std::get<arith::QuadElem>(v).is_rational();
}

// The rational value, when there is one.
inline std::optional<arith::Rational> as_rational(const KValue& v) {
  if (auto* q = std::get_if<arith::Rational>(&v)) return *q;
  const auto& z = std::get<arith::QuadElem>(v);
  if (z.is_rational()) return z.a();
  return std::nullopt;
}

inline arith::FFElem reduce(const KValue& v, const ec::PrimeOfK& P, const arith::FiniteField& F) {
  return std::visit([&](const auto& x) { return ec::reduce(x, P, F); }, v);
}

// Promote to Q(sqrt d) (d != 0) or keep rational (d == 0).
KValue promote(const KValue& v, int64_t d);

// Parses "a", "a/b", "sqrt(d)", "r5" (= sqrt 5), with + - * / and parentheses.
// `d` is the field parameter (0 for Q); mentions of other square roots fail.
KValue parse_kvalue(const std::string& text, int64_t d);

// "Q" -> 0, "Q(sqrt(5))" / "Q(sqrt5)" / "Q(sqrt 5)" -> 5.
int64_t parse_field(const std::string& text);

}  // namespace isoscope
