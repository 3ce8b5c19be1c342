#include "iwasawa/tate_period.hpp"

#include <mutex>

namespace iwasawa::ec {

using padic::PadicNumber;

std::vector<Integer> j_qexpansion(long count) {
  static std::mutex mu;
  static std::vector<Integer> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<long>(cache.size()) >= count) return {cache.begin(), cache.begin() + count};
  long M = count;
  std::vector<Integer> e4(M, Integer(0)), d(M, Integer(0));
  e4[0] = 1;
  for (long n = 1; n < M; ++n) {
    Integer s = 0;
    for (long k = 1; k <= n; ++k)
      if (n % k == 0) s += Integer(k) * k * k;
    e4[n] = 240 * s;
  }
  // prod (1 - q^n)^24
  d[0] = 1;
  for (long n = 1; n < M; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long i = M - 1; i >= n; --i) d[i] -= d[i - n];
  auto mul = [&](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(M, Integer(0));
    for (long i = 0; i < M; ++i)
      for (long j = 0; i + j < M; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<Integer> inv(M, Integer(0));
  inv[0] = 1;
  for (long n = 1; n < M; ++n) {
    Integer s = 0;
    for (long i = 1; i <= n; ++i) s += d[i] * inv[n - i];
    inv[n] = -s;
  }
  cache = mul(mul(mul(e4, e4), e4), inv);
  return cache;
}

TatePeriod tate_period(const WeierstrassCurve& E, long ell, long digits, long max_coefficients) {
  if (!is_prime(ell)) throw DomainError("tate_period needs a prime");
  if (E.j == 0 || val(E.j, ell) >= 0)
    throw DomainError("Tate period needs ord_l(j) < 0 (potentially multiplicative reduction)");
  long n = -val(E.j, ell);
  long work = digits + 3 * n + 10;
  long M = (digits + 2 * n + 5) / n + 3;
  if (M > max_coefficients) throw BoundError("q-expansion coefficient cap exceeded");
  auto S = j_qexpansion(M);
  PadicNumber jE(ell, E.j, work);
  auto P = [&](const Integer& c) { return PadicNumber::from_residue(ell, Rational(c), work + n * M); };
  auto eval = [&](const PadicNumber& q, bool deriv) {
    PadicNumber acc = PadicNumber::zero(ell, work + n * M);
    for (long k = M - 1; k >= (deriv ? 1 : 0); --k)
      acc = acc * q + (deriv ? P(Integer(S[k] * k)) : P(S[k]));
    return acc;
  };
  PadicNumber one(ell, 1, work);
  PadicNumber q = one / jE;
  for (int it = 0; it < 64; ++it) {
    PadicNumber G = q * jE - eval(q, false);
    if (G.is_zero() && G.absolute_precision() >= digits + n) break;
    PadicNumber dG = jE - eval(q, true);
    PadicNumber step = G / dG;
    q = q - step;
    if (step.is_zero()) break;
  }
  // truncation of the expansion at M terms leaves an error of order q^M
  PadicNumber jq = eval(q, false) / q + PadicNumber::zero(ell, n * (M - 1));
  PadicNumber res = jq - jE;
  long rv = res.is_zero() ? res.absolute_precision() : res.valuation().value();
  if (rv < digits) throw PrecisionError("Tate period residual check failed");
  if (q.valuation().value() != n) throw Error("Tate period has the wrong valuation");
  return {q, rv};
}

}  // namespace iwasawa::ec
