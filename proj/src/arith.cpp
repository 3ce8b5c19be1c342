#include "iwasawa/arith.hpp"

#include <algorithm>
#include <random>

namespace iwasawa {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "indeterminate";
  }
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer ipow(long b, unsigned long e) { return ipow(Integer(b), e); }

Rational qpow(const Rational& b, long e) {
  if (e < 0) {
    if (b == 0) throw DomainError("zero to a negative power");
    Rational inv = 1 / b;
    return qpow(inv, -e);
  }
  Rational r(ipow(b.get_num(), e), ipow(b.get_den(), e));
  r.canonicalize();
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod(const Integer& a, long m) {
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
}

Integer inv_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("not invertible modulo " + m.get_str());
  return r;
}

long val(const Integer& n, long p) {
  if (n == 0) throw DomainError("valuation of zero");
  if (p == 2) return mpz_scan1(n.get_mpz_t(), 0);
  Integer t = n;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long val(const Rational& q, long p) {
  return val(q.get_num(), p) - val(q.get_den(), p);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(long n) { return is_prime(Integer(n)); }

long next_prime(long n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), Integer(n).get_mpz_t());
  return r.get_si();
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

namespace {

Integer rho(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(seed);
  for (;;) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000 + 1));
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000 + 2));
    Integer g = 1, q = 1, x, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod(q * abs(Integer(x - y)), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out, unsigned long& seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = rho(n, seed++);
  factor_into(d, out, seed);
  factor_into(Integer(n / d), out, seed);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor(Integer n) {
  if (n == 0) throw DomainError("cannot factor zero");
  n = abs(n);
  std::vector<Integer> ps;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.push_back(p);
      n /= p;
    }
  }
  for (long p = 41; p < 10000 && n > 1 && Integer(p) * p <= n; p += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.push_back(p);
      n /= p;
    }
  }
  unsigned long seed = 1;
  factor_into(n, ps, seed);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<Integer, int>> out;
  for (auto& p : ps) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0) throw DomainError("divisors of zero");
  std::vector<Integer> out{1};
  for (auto& [p, e] : factor(abs(n))) {
    size_t k = out.size();
    Integer pk = 1;
    for (long i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < k; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int kronecker(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("squarefree part of zero");
  Integer r = sgn(n);
  for (auto& [p, e] : factor(n))
    if (e % 2) r *= p;
  return r;
}

bool is_local_square(const Rational& x, long l) {
  if (x == 0) return true;
  long v = val(x, l);
  if (v % 2) return false;
  Integer l_v = ipow(l, std::abs(v));
  Rational u = v >= 0 ? Rational(x / Rational(l_v)) : Rational(x * Rational(l_v));
  if (l == 2) return reduce(u, 8) == 1;
  return kronecker(reduce(u, l), l) == 1;
}

Integer reduce(const Rational& q, const Integer& m) {
  return mod(Integer(q.get_num() * inv_mod(q.get_den(), m)), m);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string str(const Integer& n) { return n.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace iwasawa
