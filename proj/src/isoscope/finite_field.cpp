#include "isoscope/finite_field.hpp"

#include "isoscope/error.hpp"
#include "isoscope/upoly.hpp"

namespace isoscope::arith {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool checked_pow(uint64_t p, int k, uint64_t& out) {
  unsigned __int128 q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > UINT64_MAX) return false;
  }
  out = static_cast<uint64_t>(q);
  return true;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<uint64_t>& monic, uint64_t p) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n < 1 || monic.back() % p != 1) fail(ErrorCode::InvalidArgument, "irreducibility test needs a monic polynomial of degree >= 1");
  if (n == 1) return true;
  FiniteField fp = FiniteField::with_modulus(p, {0, 1});
  Poly<FiniteField> f;
  for (uint64_t c : monic) f.push_back(fp.from_u64(c));
  poly::trim(fp, f);
  const Poly<FiniteField> x = poly::x(fp);
  // h_i = x^(p^i) mod f
  std::vector<Poly<FiniteField>> h{x};
  for (int i = 1; i <= n; ++i) h.push_back(poly::powmod(fp, h.back(), p, f));
  if (!poly::equal(fp, h[n], poly::rem(fp, x, f))) return false;
  for (int r : prime_divisors(n)) {
    auto g = poly::gcd(fp, f, poly::sub(fp, h[n / r], x));
    if (!poly::is_one(fp, g)) return false;
  }
  return true;
}

FiniteField::FiniteField(uint64_t p, int k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FiniteField FiniteField::with_modulus(uint64_t p, std::vector<uint64_t> modulus) {
  if (!is_prime_u64(p)) fail(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || k > kMaxExtensionDegree) fail(ErrorCode::InvalidArgument, "extension degree must be in [1, 12]");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
  if (k > 1 && !is_irreducible_mod_p(modulus, p))
    fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  return FiniteField(p, k, std::move(modulus));
}

FiniteField FiniteField::make(uint64_t p, int k) {
  if (!is_prime_u64(p)) fail(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxExtensionDegree) fail(ErrorCode::InvalidArgument, "extension degree must be in [1, 12]");
  if (k == 1) return FiniteField(p, 1, {0, 1});
  uint64_t count;
  if (!checked_pow(p, k, count)) fail(ErrorCode::FieldTooLarge, "p^k does not fit in 64 bits");
  std::vector<uint64_t> m(k + 1, 0);
  m[k] = 1;
  for (uint64_t idx = 0; idx < count; ++idx) {
    uint64_t t = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    if (m[0] == 0) continue;  // divisible by x
    if (is_irreducible_mod_p(m, p)) return FiniteField(p, k, m);
  }
  fail(ErrorCode::NotFound, "no irreducible polynomial found");
}

uint64_t FiniteField::size() const {
  uint64_t q;
  if (!checked_pow(p_, k_, q)) fail(ErrorCode::FieldTooLarge, "field size exceeds 64 bits");
  return q;
}

FFElem FiniteField::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return from_u64(static_cast<uint64_t>(r));
}

FFElem FiniteField::gen() const {
  if (k_ < 2) fail(ErrorCode::InvalidArgument, "prime field has no polynomial generator");
  Elem e;
  e.c[1] = 1;
  return e;
}

FFElem FiniteField::from_coeffs(const std::vector<uint64_t>& coeffs) const {
  // Horner in the class of x modulo the field modulus.
  Elem xval = k_ > 1 ? gen() : neg(from_u64(modulus_[0]));
  Elem acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, xval), from_u64(*it));
  return acc;
}

FFElem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < k_; ++i) r.c[i] = addmod(a.c[i], b.c[i], p_);
  return r;
}

FFElem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < k_; ++i) r.c[i] = submod(a.c[i], b.c[i], p_);
  return r;
}

FFElem FiniteField::neg(const Elem& a) const {
  Elem r;
  for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] ? p_ - a.c[i] : 0;
  return r;
}

FFElem FiniteField::mul(const Elem& a, const Elem& b) const {
  Elem r;
  if (k_ == 1) {
    r.c[0] = mulmod(a.c[0], b.c[0], p_);
    return r;
  }
  std::array<uint64_t, 2 * kMaxExtensionDegree> t{};
  for (int i = 0; i < k_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < k_; ++j) t[i + j] = addmod(t[i + j], mulmod(a.c[i], b.c[j], p_), p_);
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t c = t[i];
    if (!c) continue;
    for (int j = 0; j < k_; ++j) t[i - k_ + j] = submod(t[i - k_ + j], mulmod(c, modulus_[j], p_), p_);
  }
  for (int i = 0; i < k_; ++i) r.c[i] = t[i];
  return r;
}

FFElem FiniteField::inv(const Elem& a) const {
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  if (k_ == 1) {
    Elem r;
    r.c[0] = invmod(a.c[0], p_);
    return r;
  }
  return pow(a, size() - 2);
}

FFElem FiniteField::pth_root(const Elem& a) const {
  Elem r = a;
  for (int i = 1; i < k_; ++i) r = frobenius(r);
  return r;
}

bool FiniteField::is_square(const Elem& a) const {
  if (is_zero(a) || p_ == 2) return true;
  if (k_ == 1) return powmod(a.c[0], (p_ - 1) / 2, p_) == 1;
  return pow(a, (size() - 1) / 2) == one();
}

FFElem FiniteField::element(uint64_t index) const {
  Elem e;
  for (int i = 0; i < k_; ++i) {
    e.c[i] = index % p_;
    index /= p_;
  }
  return e;
}

uint64_t FiniteField::index_of(const Elem& a) const {
  uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

std::string FiniteField::to_string(const Elem& a) const {
  if (k_ == 1) return std::to_string(a.c[0]);
  std::string s = "[";
  for (int i = 0; i < k_; ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
  return s + "]";
}

}  // namespace isoscope::arith
