#include "iwasawa/local.hpp"

#include <cmath>

namespace iwasawa::ec {

const char* to_string(Reduction r) {
  switch (r) {
    case Reduction::good: return "good";
    case Reduction::multiplicative_split: return "multiplicative_split";
    case Reduction::multiplicative_nonsplit: return "multiplicative_nonsplit";
    default: return "additive";
  }
}

namespace {

using Poly = std::vector<Integer>;  // ascending, coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& b, const Integer& p) {
  Integer inv = inv_mod(b.back(), p);
  long db = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    Integer c = mod(Integer(a[i] * inv), p);
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) a[i - db + j] = mod(Integer(a[i - db + j] - c * b[j]), p);
  }
  if (static_cast<long>(a.size()) > db) a.resize(db);
  trim(a);
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = mod(x, p);
  trim(c);
  return pmod(c, m, p);
}

Poly pgcd(Poly a, Poly b, const Integer& p) {
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool divides(const Integer& x, long p, long e) { return mpz_divisible_p(x.get_mpz_t(), ipow(p, e).get_mpz_t()); }

}  // namespace

long count_roots_mod_p(std::vector<Integer> f, long p) {
  Integer P(p);
  for (auto& x : f) x = mod(x, P);
  trim(f);
  if (f.empty()) throw DomainError("zero polynomial has every element as a root");
  if (f.size() == 1) return 0;
  if (p < 50) {
    long n = 0;
    for (long x = 0; x < p; ++x) {
      Integer acc = 0;
      for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i) acc = mod(Integer(acc * x + f[i]), P);
      if (acc == 0) ++n;
    }
    return n;
  }
  // distinct roots = deg gcd(f, x^p - x)
  Poly xp{0, 1}, acc{1};
  Poly base = pmod(xp, f, P);
  for (long e = p; e; e >>= 1) {
    if (e & 1) acc = pmulmod(acc, base, f, P);
    base = pmulmod(base, base, f, P);
  }
  Poly h = acc;
  h.resize(std::max<size_t>(h.size(), 2), Integer(0));
  h[1] = mod(Integer(h[1] - 1), P);
  trim(h);
  Poly g = h.empty() ? f : pgcd(f, h, P);
  return static_cast<long>(g.size()) - 1;
}

bool split_by_c4c6(const WeierstrassCurve& E, long ell) {
  if (E.c6 == 0) throw DomainError("c6 = 0: not multiplicative");
  return is_local_square(Rational(-E.c4) / E.c6, ell);
}

LocalData tate_local(const WeierstrassCurve& E0, long p, long count_bound) {
  if (!is_prime(p)) throw DomainError("tate_local needs a prime");
  LocalData out;
  out.ell = p;
  ModelChange total;
  WeierstrassCurve E = E0;
  Integer P(p);
  Integer half = (p + 1) / 2;
  if (E0.j != 0) out.ord_j = val(E0.j, p);

  auto rst = [&](const Rational& r, const Rational& s, const Rational& t) {
    ModelChange c{1, r, s, t};
    E = to_integral(c.apply(E.rational_ainvs()));
    total = total.then(c);
  };
  auto pdiv = [&](const Integer& x) { return mpz_divisible_ui_p(x.get_mpz_t(), p) != 0; };
  auto has_root = [&](const Integer& a, const Integer& b, const Integer& c) {
    return count_roots_mod_p({c, b, a}, p) > 0;
  };
  auto finish = [&](Reduction kind, long c, long f, std::string ks) {
    out.kind = kind;
    out.tamagawa = c;
    out.conductor_exponent = f;
    out.kodaira = std::move(ks);
    out.minimal = E;
    out.change = total;
    out.ord_disc = val(E.disc, p);
  };

  for (;;) {
    long n = val(E.disc, p);
    if (n == 0) {
      finish(Reduction::good, 1, 0, "I0");
      break;
    }
    Integer r, t;
    if (p == 2) {
      if (pdiv(E.b2)) {
        r = mod(E.a4, 2);
        t = mod(Integer(r * (1 + E.a2 + E.a4) + E.a6), 2);
      } else {
        r = mod(E.a3, 2);
        t = mod(Integer(r + E.a4), 2);
      }
    } else if (p == 3) {
      r = pdiv(E.b2) ? mod(Integer(-E.b6), 3) : mod(Integer(-E.b2 * E.b4), 3);
      t = mod(Integer(E.a1 * r + E.a3), 3);
    } else {
      if (pdiv(E.c4))
        r = mod(Integer(-inv_mod(12, P) * E.b2), P);
      else
        r = mod(Integer(-inv_mod(Integer(12 * E.c4), P) * (E.c6 + E.b2 * E.c4)), P);
      t = mod(Integer(-half * (E.a1 * r + E.a3)), P);
    }
    rst(Rational(r), 0, Rational(t));
    if (!pdiv(E.a3) || !pdiv(E.a4) || !pdiv(E.a6)) throw Error("Tate: singular point not moved to the origin");

    if (!pdiv(E.c4)) {
      bool split = has_root(1, E.a1, -E.a2);
      if (split != split_by_c4c6(E, p)) throw Error("Tate: split tests disagree");
      if (split)
        finish(Reduction::multiplicative_split, n, 1, "I" + std::to_string(n));
      else
        finish(Reduction::multiplicative_nonsplit, n % 2 ? 1 : 2, 1, "I" + std::to_string(n));
      break;
    }
    if (!divides(E.a6, p, 2)) {
      finish(Reduction::additive, 1, n, "II");
      break;
    }
    if (!divides(E.b8, p, 3)) {
      finish(Reduction::additive, 2, n - 1, "III");
      break;
    }
    if (!divides(E.b6, p, 3)) {
      bool sp = has_root(1, Integer(E.a3 / p), Integer(-E.a6 / (P * P)));
      finish(Reduction::additive, sp ? 3 : 1, n - 2, "IV");
      break;
    }
    Integer s;
    if (p == 2) {
      s = mod(E.a2, 2);
      t = 2 * mod(Integer(E.a6 / 4), 2);
    } else {
      s = -E.a1 * half;
      t = -E.a3 * half;
    }
    rst(0, Rational(s), Rational(t));
    if (!pdiv(E.a1) || !pdiv(E.a2) || !divides(E.a3, p, 2) || !divides(E.a4, p, 2) || !divides(E.a6, p, 3))
      throw Error("Tate: normalisation for the cubic failed");
    Integer b = E.a2 / P, c = E.a4 / (P * P), d = E.a6 / (P * P * P);
    Integer w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    Integer x = 3 * c - b * b;
    int sw = !pdiv(w) ? 1 : (pdiv(x) ? 3 : 2);
    if (sw == 1) {
      long roots = count_roots_mod_p({d, c, b, 1}, p);
      finish(Reduction::additive, 1 + roots, n - 4, "I0*");
      break;
    }
    if (sw == 2) {
      Integer rr;
      if (p == 2)
        rr = c;
      else if (p == 3)
        rr = b * c;
      else
        rr = (b * c - 9 * d) * inv_mod(Integer(2 * x), P);
      rst(Rational(Integer(P * mod(rr, P))), 0, 0);
      if (!divides(E.a4, p, 3) || !divides(E.a6, p, 4)) throw Error("Tate: double root not moved to zero");
      long ix = 3, iy = 3;
      Integer mx = P * P, my = P * P;
      long cp = 0;
      for (;;) {
        Integer a2t = E.a2 / P, a3t = E.a3 / my, a4t = (E.a4 / P) / mx, a6t = E.a6 / (mx * my);
        if (!pdiv(Integer(a3t * a3t + 4 * a6t))) {
          cp = has_root(1, a3t, -a6t) ? 4 : 2;
          break;
        }
        t = p == 2 ? Integer(my * mod(a6t, 2)) : Integer(my * mod(Integer(-a3t * half), P));
        rst(0, 0, Rational(t));
        my *= P;
        ++iy;
        a2t = E.a2 / P;
        a4t = (E.a4 / P) / mx;
        a6t = E.a6 / (mx * my);
        if (!pdiv(Integer(a4t * a4t - 4 * a6t * a2t))) {
          cp = has_root(a2t, a4t, a6t) ? 4 : 2;
          break;
        }
        rr = p == 2 ? Integer(mx * mod(Integer(a6t * a2t), 2)) : Integer(mx * mod(Integer(-a4t * inv_mod(Integer(2 * a2t), P)), P));
        rst(Rational(rr), 0, 0);
        mx *= P;
        ++ix;
      }
      finish(Reduction::additive, cp, n - ix - iy + 1, "I" + std::to_string(ix + iy - 5) + "*");
      break;
    }
    // triple root
    Integer rr = p == 2 ? b : (p == 3 ? Integer(-d) : Integer(-b * inv_mod(3, P)));
    rst(Rational(Integer(P * mod(rr, P))), 0, 0);
    Integer a3t = E.a3 / (P * P), a6t = E.a6 / (P * P * P * P);
    if (!pdiv(Integer(a3t * a3t + 4 * a6t))) {
      finish(Reduction::additive, has_root(1, a3t, -a6t) ? 3 : 1, n - 6, "IV*");
      break;
    }
    t = p == 2 ? Integer(P * P * mod(a6t, 2)) : Integer(P * P * mod(Integer(-a3t * half), P));
    rst(0, 0, Rational(t));
    if (!divides(E.a4, p, 4)) {
      finish(Reduction::additive, 2, n - 7, "III*");
      break;
    }
    if (!divides(E.a6, p, 6)) {
      finish(Reduction::additive, 1, n - 8, "II*");
      break;
    }
    ModelChange down{Rational(P), 0, 0, 0};
    E = to_integral(down.apply(E.rational_ainvs()));
    total = total.then(down);
  }

  if (out.kind == Reduction::good && p <= count_bound) {
    long ap = p + 1 - count_points(out.minimal, p).get_si();
    out.ap = ap;
    out.supersingular = mod(Integer(ap), p) == 0;
    out.anomalous = mod(Integer(ap - 1), p) == 0;
    out.ordinary = !out.supersingular;
  }
  return out;
}

Integer count_points(const WeierstrassCurve& E, long p) {
  if (p == 2) {
    long n = 1;
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) {
        Integer l = y * y + E.a1 * x * y + E.a3 * y;
        Integer r = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
        if (mod(Integer(l - r), 2) == 0) ++n;
      }
    return n;
  }
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[(y * y) % p] = 1;
  long b2 = mod(E.b2, p), b4 = mod(E.b4, p), b6 = mod(E.b6, p);
  long n = 1;
  for (long x = 0; x < p; ++x) {
    __int128 v = 4;
    v = (v * x + b2) % p;
    v = (v * x + 2 * b4) % p;
    v = (v * x + b6) % p;
    n += 1 + chi[static_cast<long>(v)];
  }
  return n;
}

long ap_count(const WeierstrassCurve& E, long p, long count_bound) {
  if (!is_prime(p)) throw DomainError("ap_count needs a prime");
  if (p > count_bound) throw BoundError("p exceeds the point-counting bound");
  auto ld = tate_local(E, p, 0);
  if (ld.kind != Reduction::good) throw DomainError("bad reduction at " + std::to_string(p));
  long ap = p + 1 - count_points(ld.minimal, p).get_si();
  if (static_cast<double>(ap) * ap >= 4.0 * p) throw Error("Hasse bound violated");
  return ap;
}

PClass classify_at_p(const WeierstrassCurve& E, long p) {
  long ap = ap_count(E, p);
  return {ap, mod(Integer(ap), p) == 0, mod(Integer(ap - 1), p) == 0};
}

std::pair<WeierstrassCurve, ModelChange> minimal_model(const WeierstrassCurve& E) {
  WeierstrassCurve cur = E;
  ModelChange total;
  for (auto& q : bad_primes(E)) {
    if (!q.fits_slong_p()) throw BoundError("prime too large for Tate's algorithm");
    long p = q.get_si();
    if (val(cur.disc, p) < 12) continue;
    auto ld = tate_local(cur, p, 0);
    cur = ld.minimal;
    total = total.then(ld.change);
  }
  auto [sf, c] = standard_form(cur);
  return {sf, total.then(c)};
}

}  // namespace iwasawa::ec
