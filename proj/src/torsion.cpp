#include "iwasawa/torsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "iwasawa/local.hpp"

namespace iwasawa::ec {

long TorsionGroup::order() const {
  long n = 1;
  for (long k : invariants) n *= k;
  return n;
}

std::string TorsionGroup::structure() const {
  if (invariants.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < invariants.size(); ++i) os << (i ? " x " : "") << "Z/" << invariants[i];
  return os.str();
}

long torsion_bound(const WeierstrassCurve& E) {
  Integer g = 0;
  int found = 0;
  for (long l = 5; found < 3; l = next_prime(l)) {
    if (mpz_divisible_ui_p(E.disc.get_mpz_t(), l)) {
      auto ld = tate_local(E, l, 0);
      if (ld.kind != Reduction::good) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), count_points(ld.minimal, l).get_mpz_t());
    } else {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), count_points(E, l).get_mpz_t());
    }
    ++found;
  }
  return g.get_si();
}

std::vector<Integer> integer_cubic_roots(const Integer& a, const Integer& b, const Integer& c) {
  auto g = [&](const Integer& x) -> Integer { return ((x + a) * x + b) * x + c; };
  Integer bound = 1 + std::max({abs(a), abs(b), abs(c)});
  std::vector<Integer> roots;
  auto probe = [&](const Integer& x) {
    if (g(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
  };
  // g is monotone outside small windows around the critical points of 3x^2 + 2ax + b
  std::vector<std::pair<Integer, Integer>> pieces;
  Integer disc = a * a - 3 * b;
  Integer lo = -bound;
  if (disc > 0) {
    Integer s = isqrt(disc);
    for (Integer c0 : {Integer((-a - s) / 3), Integer((-a + s) / 3)}) {
      Integer wlo = c0 - 2, whi = c0 + 2;
      for (Integer x = wlo; x <= whi; ++x) probe(x);
      if (wlo > lo) pieces.emplace_back(lo, wlo);
      if (whi > lo) lo = whi;
    }
  }
  if (bound > lo) pieces.emplace_back(lo, bound);
  for (auto [l, h] : pieces) {
    probe(l);
    probe(h);
    int sl = sgn(g(l)), sh = sgn(g(h));
    if (sl == 0 || sh == 0 || sl == sh) continue;
    while (h - l > 1) {
      Integer mid = (l + h) / 2;
      int sm = sgn(g(mid));
      if (sm == 0) {
        probe(mid);
        break;
      }
      if (sm == sl)
        l = mid;
      else
        h = mid;
    }
    probe(l);
    probe(h);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RationalPoint> two_torsion_points(const WeierstrassCurve& E) {
  // 2y + a1 x + a3 = 0 with x a root of 4x^3 + b2 x^2 + 2 b4 x + b6; X = 4x is integral
  std::vector<RationalPoint> out;
  for (auto& X : integer_cubic_roots(E.b2, 8 * E.b4, 16 * E.b6)) {
    Rational x(X, 4);
    x.canonicalize();
    Rational y = -(Rational(E.a1) * x + Rational(E.a3)) / 2;
    out.push_back(RationalPoint::affine(x, y));
  }
  return out;
}

TorsionGroup torsion(const WeierstrassCurve& E) {
  AInvs a = E.rational_ainvs();
  long m = torsion_bound(E);
  TorsionGroup G;
  G.points.push_back(RationalPoint::at_infinity());
  if (m > 1) {
    WeierstrassCurve S = short_model(E);
    ModelChange to_short = short_model_change(E);
    AInvs sa = S.rational_ainvs();
    const Integer &A = S.a4, &B = S.a6;
    Integer D = 4 * A * A * A + 27 * B * B;
    std::vector<Integer> ys{0};
    auto fac = factor(D);
    std::function<void(size_t, Integer)> rec = [&](size_t i, Integer y) {
      if (i == fac.size()) {
        ys.push_back(y);
        return;
      }
      Integer pp = 1;
      for (int e = 0; 2 * e <= fac[i].second; ++e) {
        rec(i + 1, y * pp);
        pp *= fac[i].first;
      }
    };
    rec(0, 1);
    for (auto& y : ys) {
      for (auto& x : integer_cubic_roots(0, A, Integer(B - y * y))) {
        for (int sign : {1, -1}) {
          if (y == 0 && sign < 0) continue;
          RationalPoint P = RationalPoint::affine(Rational(x), Rational(Integer(sign * y)));
          auto ord = point_order(sa, P, 12);
          if (!ord || m % *ord) continue;
          RationalPoint Q = to_short.pull_back(P);
          if (std::find(G.points.begin(), G.points.end(), Q) == G.points.end()) G.points.push_back(Q);
        }
      }
    }
  }
  long n = static_cast<long>(G.points.size());
  if (n == 1) return G;
  std::vector<long> ord;
  for (auto& P : G.points) ord.push_back(*point_order(a, P, 12));
  long top = *std::max_element(ord.begin(), ord.end());
  RationalPoint g1 = G.points[std::find(ord.begin(), ord.end(), top) - ord.begin()];
  if (top == n) {
    G.invariants = {n};
    G.generators = {g1};
  } else {
    long b = n / top;
    std::vector<RationalPoint> cyc;
    for (long k = 0; k < top; ++k) cyc.push_back(multiply(a, g1, k));
    for (size_t i = 0; i < G.points.size(); ++i) {
      if (ord[i] != b) continue;
      if (std::find(cyc.begin(), cyc.end(), G.points[i]) != cyc.end()) continue;
      G.invariants = {b, top};
      G.generators = {G.points[i], g1};
      break;
    }
    if (G.generators.empty()) throw Error("torsion: could not split the group");
  }
  for (size_t i = 0; i < G.generators.size(); ++i)
    if (point_order(a, G.generators[i], 12) != G.invariants[i]) throw Error("torsion: generator order mismatch");
  return G;
}

}  // namespace iwasawa::ec
