#include "isoscope/series.hpp"

namespace isoscope::arith {

IntSeries euler_product(int N) {
  IntSeries s(0, N);
  // sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k}) {
      if (k == 0 && any) continue;
      long e = kk * (3 * kk - 1) / 2;
      if (e < N) {
        s.at(static_cast<int>(e)) += (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return s;
}

IntSeries eisenstein_e4(int N) {
  IntSeries s(0, N);
  if (N > 0) s.at(0) = 1;
  for (int n = 1; n < N; ++n) {
    Integer sigma = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sigma += Integer(d) * d * d;
    s.at(n) = 240 * sigma;
  }
  return s;
}

IntSeries delta_q_expansion(int N) {
  if (N < 2) fail(ErrorCode::InvalidArgument, "Delta expansion needs N >= 2");
  IntSeries eta24 = euler_product(N - 1).pow(24);
  IntSeries d(1, N);
  for (int e = 1; e < N; ++e) d.at(e) = eta24.coeff(e - 1);
  return d;
}

IntSeries j_q_expansion(int N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "j expansion needs N >= 1");
  // 1/Delta = q^{-1} * (prod (1-q^n))^{-24}; we need the product through q^N.
  IntSeries inv = euler_product(N + 1).pow(24).inverse();
  IntSeries e4 = eisenstein_e4(N + 1);
  IntSeries num = e4 * e4 * e4 * inv;
  IntSeries j(-1, N);
  for (int e = -1; e < N; ++e) j.at(e) = num.coeff(e + 1);
  return j;
}

}  // namespace isoscope::arith
