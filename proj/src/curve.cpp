#include "iwasawa/curve.hpp"

#include <sstream>

namespace iwasawa::ec {

Invariants invariants(const AInvs& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  Invariants v;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
  return v;
}

WeierstrassCurve curve_invariants(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, const Integer& a6) {
  WeierstrassCurve E{a1, a2, a3, a4, a6, 0, 0, 0, 0, 0, 0, 0, 0};
  auto v = invariants(E.rational_ainvs());
  if (v.disc == 0) throw DomainError("singular curve: discriminant is zero");
  E.b2 = v.b2.get_num();
  E.b4 = v.b4.get_num();
  E.b6 = v.b6.get_num();
  E.b8 = v.b8.get_num();
  E.c4 = v.c4.get_num();
  E.c6 = v.c6.get_num();
  E.disc = v.disc.get_num();
  E.j = Rational(E.c4 * E.c4 * E.c4, E.disc);
  E.j.canonicalize();
  return E;
}

WeierstrassCurve curve_invariants(const std::array<Integer, 5>& a) {
  return curve_invariants(a[0], a[1], a[2], a[3], a[4]);
}

WeierstrassCurve parse_curve(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ' && c != '"') s += c;
  std::stringstream ss(s);
  std::string item;
  std::vector<Integer> a;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (v.set_str(item, 10) != 0) throw DomainError("bad a-invariant: " + item);
    a.push_back(v);
  }
  if (a.size() != 5) throw DomainError("expected five a-invariants: " + text);
  return curve_invariants(a[0], a[1], a[2], a[3], a[4]);
}

AInvs WeierstrassCurve::rational_ainvs() const {
  return {Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};
}

std::string WeierstrassCurve::to_string() const {
  std::ostringstream os;
  os << "[" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6 << "]";
  return os.str();
}

std::string RationalPoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool on_curve(const AInvs& a, const RationalPoint& P) {
  if (P.infinity) return true;
  const auto& [a1, a2, a3, a4, a6] = a;
  const Rational &x = P.x, &y = P.y;
  return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

RationalPoint negate(const AInvs& a, const RationalPoint& P) {
  if (P.infinity) return P;
  return RationalPoint::affine(P.x, -P.y - a[0] * P.x - a[2]);
}

RationalPoint add(const AInvs& a, const RationalPoint& P, const RationalPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const auto& [a1, a2, a3, a4, a6] = a;
  Rational lam, nu;
  if (P.x == Q.x) {
    if (P.y + Q.y + a1 * Q.x + a3 == 0) return RationalPoint::at_infinity();
    Rational den = 2 * P.y + a1 * P.x + a3;
    lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / den;
    nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / den;
  } else {
    lam = (Q.y - P.y) / (Q.x - P.x);
    nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
  }
  Rational x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
  Rational y3 = -(lam + a1) * x3 - nu - a3;
  return RationalPoint::affine(x3, y3);
}

RationalPoint multiply(const AInvs& a, const RationalPoint& P, long n) {
  if (n < 0) return multiply(a, negate(a, P), -n);
  RationalPoint acc, base = P;
  while (n) {
    if (n & 1) acc = add(a, acc, base);
    n >>= 1;
    if (n) base = add(a, base, base);
  }
  return acc;
}

std::optional<long> point_order(const AInvs& a, const RationalPoint& P, long bound) {
  RationalPoint Q = P;
  for (long k = 1; k <= bound; ++k) {
    if (Q.infinity) return k;
    Q = add(a, Q, P);
  }
  return std::nullopt;
}

static void require_on(const WeierstrassCurve& E, const RationalPoint& P) {
  if (!on_curve(E.rational_ainvs(), P)) throw DomainError("point " + P.to_string() + " is not on " + E.to_string());
}

RationalPoint point_add(const WeierstrassCurve& E, const RationalPoint& P, const RationalPoint& Q) {
  require_on(E, P);
  require_on(E, Q);
  return add(E.rational_ainvs(), P, Q);
}

RationalPoint point_mul(const WeierstrassCurve& E, const RationalPoint& P, long n) {
  require_on(E, P);
  return multiply(E.rational_ainvs(), P, n);
}

AInvs ModelChange::apply(const AInvs& a) const {
  const auto& [a1, a2, a3, a4, a6] = a;
  AInvs b;
  b[0] = (a1 + 2 * s) / u;
  b[1] = (a2 - s * a1 + 3 * r - s * s) / (u * u);
  b[2] = (a3 + r * a1 + 2 * t) / (u * u * u);
  b[3] = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / qpow(u, 4);
  b[4] = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / qpow(u, 6);
  return b;
}

RationalPoint ModelChange::map_point(const RationalPoint& P) const {
  if (P.infinity) return P;
  Rational x = (P.x - r) / (u * u);
  Rational y = (P.y - s * (P.x - r) - t) / (u * u * u);
  return RationalPoint::affine(x, y);
}

RationalPoint ModelChange::pull_back(const RationalPoint& P) const {
  if (P.infinity) return P;
  Rational x = u * u * P.x + r;
  Rational y = u * u * u * P.y + u * u * s * P.x + t;
  return RationalPoint::affine(x, y);
}

ModelChange ModelChange::then(const ModelChange& n) const {
  return {u * n.u, r + u * u * n.r, s + u * n.s, t + u * u * s * n.r + u * u * u * n.t};
}

ModelChange ModelChange::inverse() const {
  Rational ui = 1 / u;
  return {ui, -r * ui * ui, -s * ui, (r * s - t) * ui * ui * ui};
}

WeierstrassCurve to_integral(const AInvs& a) {
  std::array<Integer, 5> z;
  for (int i = 0; i < 5; ++i) {
    if (a[i].get_den() != 1) throw DomainError("model is not integral");
    z[i] = a[i].get_num();
  }
  return curve_invariants(z);
}

std::pair<WeierstrassCurve, ModelChange> integral_model(const AInvs& a) {
  static const int weight[5] = {1, 2, 3, 4, 6};
  Integer u = 1;
  for (auto& [p, e] : [&] {
         Integer den = 1;
         for (auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
         return den == 1 ? std::vector<std::pair<Integer, int>>{} : factor(den);
       }()) {
    long need = 0;
    for (int i = 0; i < 5; ++i) {
      if (a[i] == 0) continue;
      long v = -val(a[i], p.get_si());
      if (v > 0) need = std::max(need, (v + weight[i] - 1) / weight[i]);
    }
    u *= ipow(p, need);
  }
  ModelChange c{Rational(1, 1) / Rational(u), 0, 0, 0};
  return {to_integral(c.apply(a)), c};
}

std::pair<WeierstrassCurve, ModelChange> standard_form(const WeierstrassCurve& E) {
  AInvs a = E.rational_ainvs();
  Integer s = (mod(E.a1, 2) - E.a1) / 2;
  ModelChange c1{1, 0, Rational(s), 0};
  AInvs b = c1.apply(a);
  Integer a2 = b[1].get_num();
  Integer target = mod(Integer(a2 + 1), 3) - 1;
  ModelChange c2{1, Rational(Integer((target - a2) / 3)), 0, 0};
  AInvs c = c2.apply(b);
  Integer a3 = c[2].get_num();
  ModelChange c3{1, 0, 0, Rational(Integer((mod(a3, 2) - a3) / 2))};
  ModelChange total = c1.then(c2).then(c3);
  return {to_integral(total.apply(a)), total};
}

static std::optional<Rational> rational_root(const Rational& x, unsigned long k) {
  if (x < 0 && k % 2 == 0) return std::nullopt;
  Integer n = abs(x.get_num()), d = x.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
  Rational r(rn, rd);
  if (x < 0) r = -r;
  return r;
}

std::optional<ModelChange> find_isomorphism(const AInvs& from, const AInvs& to) {
  auto A = invariants(from), B = invariants(to);
  if (A.disc == 0 || B.disc == 0) throw DomainError("singular model");
  // c4' = c4 / u^4, c6' = c6 / u^6
  std::vector<Rational> us;
  if ((A.c4 == 0) != (B.c4 == 0) || (A.c6 == 0) != (B.c6 == 0)) return std::nullopt;
  if (A.c4 != 0 && A.c6 != 0) {
    if (auto u = rational_root(A.c6 * B.c4 / (B.c6 * A.c4), 2)) us = {*u, -*u};
  } else if (A.c4 == 0) {
    if (auto u = rational_root(A.c6 / B.c6, 6)) us = {*u, -*u};
  } else {
    if (auto u = rational_root(A.c4 / B.c4, 4)) us = {*u, -*u};
  }
  for (auto& u : us) {
    Rational s = (u * to[0] - from[0]) / 2;
    Rational r = (u * u * to[1] - from[1] + s * from[0] + s * s) / 3;
    Rational t = (u * u * u * to[2] - from[2] - r * from[0]) / 2;
    ModelChange c{u, r, s, t};
    if (c.apply(from) == to) return c;
  }
  return std::nullopt;
}

WeierstrassCurve short_model(const WeierstrassCurve& E) {
  return curve_invariants(0, 0, 0, -27 * E.c4, -54 * E.c6);
}

ModelChange short_model_change(const WeierstrassCurve& E) {
  Rational a1(E.a1), a3(E.a3), b2(E.b2);
  return {Rational(1, 6), -b2 / 12, -a1 / 2, a1 * b2 / 24 - a3 / 2};
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& d) {
  if (d == 0) throw DomainError("twist by zero");
  if (squarefree_part(d) != d) throw DomainError("twist parameter must be squarefree");
  return curve_invariants(0, 0, 0, -27 * E.c4 * d * d, -54 * E.c6 * d * d * d);
}

std::vector<Integer> bad_primes(const WeierstrassCurve& E) { return prime_divisors(E.disc); }

}  // namespace iwasawa::ec
