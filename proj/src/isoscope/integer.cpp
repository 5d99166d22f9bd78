#include "isoscope/integer.hpp"

#include <cctype>
#include <cmath>

#include "isoscope/error.hpp"

namespace isoscope::arith {

namespace {

bool parse_integer(const std::string& s, Integer& out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return out.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  Integer num, den(1);
  if (slash == std::string::npos) {
    if (!parse_integer(s, num)) return std::nullopt;
  } else {
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

std::optional<Integer> integer_sqrt_exact(const Integer& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  auto n = integer_sqrt_exact(x.get_num());
  if (!n) return std::nullopt;
  auto d = integer_sqrt_exact(x.get_den());
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

Integer height(const Rational& x) {
  Integer n = abs(x.get_num());
  return n > x.get_den() ? n : Integer(x.get_den());
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  __int128 t = 0, newt = 1;
  __int128 r = m, newr = a % m;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(ErrorCode::DivisionByZero, "element is not invertible modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  static constexpr uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : small) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    fail(ErrorCode::InvalidArgument, "primality test limited to 64-bit inputs");
  return is_prime_u64(n.get_ui());
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

int legendre(int64_t a, uint64_t p) {
  int64_t r = a % static_cast<int64_t>(p);
  if (r < 0) r += static_cast<int64_t>(p);
  if (r == 0) return 0;
  return powmod(static_cast<uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(const Integer& a, uint64_t p) {
  uint64_t r = reduce_mod(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

bool is_squarefree(int64_t n) {
  if (n == 0) return false;
  uint64_t m = n < 0 ? static_cast<uint64_t>(-n) : static_cast<uint64_t>(n);
  for (uint64_t f = 2; f * f <= m; ++f) {
    if (m % (f * f) == 0) return false;
    if (m % f == 0) m /= f;
  }
  return true;
}

int64_t squarefree_part(int64_t n) {
  if (n == 0) return 0;
  int64_t sign = n < 0 ? -1 : 1;
  uint64_t m = n < 0 ? static_cast<uint64_t>(-n) : static_cast<uint64_t>(n);
  uint64_t out = 1;
  for (uint64_t f = 2; f * f <= m; ++f) {
    int e = 0;
    while (m % f == 0) {
      m /= f;
      ++e;
    }
    if (e % 2) out *= f;
  }
  out *= m;
  return sign * static_cast<int64_t>(out);
}

std::optional<uint64_t> reduce_mod(const Rational& x, uint64_t p) {
  uint64_t den = reduce_mod(x.get_den(), p);
  if (den == 0) return std::nullopt;
  return mulmod(reduce_mod(x.get_num(), p), invmod(den, p), p);
}

int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorCode::InvalidArgument, "integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

}  // namespace isoscope::arith
