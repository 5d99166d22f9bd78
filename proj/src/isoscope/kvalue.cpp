#include "isoscope/kvalue.hpp"

#include <cctype>

namespace isoscope {

using arith::QuadElem;
using arith::Rational;

KValue promote(const KValue& v, int64_t d) {
  if (d == 0) {
    if (auto* q = std::get_if<QuadElem>(&v)) {
      if (!q->is_rational()) fail(ErrorCode::InvalidArgument, "irrational value " + q->to_string() + " over Q");
      return q->a();
    }
    return v;
  }
  if (auto* r = std::get_if<Rational>(&v)) return QuadElem(d, *r);
  const auto& q = std::get<QuadElem>(v);
  if (q.d() != d) {
    if (q.is_rational()) return QuadElem(d, q.a());
    fail(ErrorCode::InvalidArgument, q.to_string() + " is not in Q(sqrt " + std::to_string(d) + ")");
  }
  return v;
}

namespace {

// Recursive-descent parser over Q(sqrt d) with QuadElem values; d = 0 uses a
// placeholder field and rejects irrational terms at the end.
class Parser {
 public:
  Parser(const std::string& s, int64_t d) : s_(s), d_(d == 0 ? 5 : d), rational_only_(d == 0) {}

  QuadElem parse() {
    QuadElem v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "cannot parse '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  QuadElem expr() {
    QuadElem v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  QuadElem term() {
    QuadElem v = unary();
    while (true) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        QuadElem w = unary();
        if (w.a() == 0 && w.b() == 0) error("division by zero");
        v /= w;
      } else return v;
    }
  }
  QuadElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  QuadElem power() {
    QuadElem base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      QuadElem r(d_, 1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }
  QuadElem root_of(int64_t n) {
    if (n == d_ && !rational_only_) return QuadElem(d_, 0, 1);
    // sqrt of a perfect square, or of n = d * k^2
    if (auto r = arith::rational_sqrt(Rational(n))) return QuadElem(d_, *r);
    if (!rational_only_ && n % d_ == 0)
      if (auto r = arith::rational_sqrt(Rational(n / d_))) return QuadElem(d_, 0, *r);
    error("sqrt(" + std::to_string(n) + ") is not in the field");
  }
  QuadElem atom() {
    skip();
    if (eat('(')) {
      QuadElem v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      bool paren = eat('(');
      skip();
      bool neg = eat('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer under sqrt");
      int64_t n = std::stoll(s_.substr(start, pos_ - start));
      if (paren && !eat(')')) error("expected ')'");
      return root_of(neg ? -n : n);
    }
    if (pos_ < s_.size() && s_[pos_] == 'r') {
      ++pos_;
      bool neg = eat('-');
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer after 'r'");
      int64_t n = std::stoll(s_.substr(start, pos_ - start));
      return root_of(neg ? -n : n);
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    arith::Integer z(s_.substr(start, pos_ - start));
    return QuadElem(d_, Rational(z));
  }

  std::string s_;
  size_t pos_ = 0;
  int64_t d_;
  bool rational_only_;
};

}  // namespace

KValue parse_kvalue(const std::string& text, int64_t d) {
  QuadElem v = Parser(text, d).parse();
  if (d == 0) {
    if (!v.is_rational()) fail(ErrorCode::ParseError, "'" + text + "' is not rational");
    return v.a();
  }
  return v;
}

int64_t parse_field(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "Q" || s == "QQ") return 0;
  std::string inner;
  for (const std::string prefix : {"Q(sqrt(", "Q(sqrt", "Q(r"}) {
    if (s.rfind(prefix, 0) == 0) {
      inner = s.substr(prefix.size());
      break;
    }
  }
  while (!inner.empty() && inner.back() == ')') inner.pop_back();
  try {
    size_t used = 0;
    int64_t d = std::stoll(inner, &used);
    if (used == inner.size() && d != 0 && d != 1 && arith::is_squarefree(d)) return d;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::ParseError, "unrecognized field '" + text + "' (expected Q or Q(sqrt(d)))");
}

}  // namespace isoscope
