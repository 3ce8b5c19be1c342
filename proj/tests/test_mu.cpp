#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iwasawa/local.hpp"
#include "iwasawa/mu.hpp"
#include "iwasawa/torsion.hpp"

using namespace iwasawa;
using namespace iwasawa::ec;
using namespace iwasawa::mu;

static WeierstrassCurve C(long a1, long a2, long a3, long a4, long a6) { return curve_invariants(a1, a2, a3, a4, a6); }
static RationalPoint pt(Rational x, Rational y) { return RationalPoint::affine(std::move(x), std::move(y)); }

static const WeierstrassCurve E15a3 = C(1, 1, 1, -5, 2);
static const WeierstrassCurve E195a2 = C(1, 0, 0, -115, 392);

TEST_CASE("two-torsion classification on 15a3") {
  auto a = classify_two_torsion(E15a3, pt(Rational(3, 4), Rational(-7, 8)));
  CHECK(a.ramified);
  CHECK_FALSE(a.odd);
  auto b = classify_two_torsion(E15a3, pt(-3, 1));
  CHECK_FALSE(b.ramified);
  CHECK(b.odd);
  auto c = classify_two_torsion(E15a3, pt(1, -1));
  CHECK_FALSE(c.ramified);
  CHECK_FALSE(c.odd);
  CHECK_THROWS_AS(classify_two_torsion(E15a3, pt(0, 1)), DomainError);
  // y^2 = x^3 - 4x: additive at 2
  CHECK_THROWS_AS(classify_two_torsion(C(0, 0, 0, -4, 0), pt(0, 0)), DomainError);
}

TEST_CASE("zero certificates") {
  for (auto P : {pt(Rational(3, 4), Rational(-7, 8)), pt(-3, 1)}) {
    auto c = classify_two_torsion(E15a3, P);
    auto v = mu_zero_certificate(2, {2, 1, c.ramified, c.odd, Provenance::computed, ""});
    CHECK(v.zero_certified);
    CHECK(v.lower_bound == 0);
  }
  CHECK_FALSE(mu_zero_certificate(2, {2, 1, true, true, Provenance::computed, ""}).zero_certified);
  CHECK_FALSE(mu_zero_certificate(5, {5, 1, false, false, Provenance::input, ""}).zero_certified);
  CHECK_THROWS_AS(mu_zero_certificate(2, {2, 2, true, false, Provenance::input, ""}), DomainError);
  CHECK_THROWS_AS(mu_zero_certificate(3, {2, 1, true, false, Provenance::input, ""}), DomainError);
}

TEST_CASE("Kramer families") {
  auto k = kramer_m1(-2, 1);
  CHECK(k.E.ainvs() == std::array<Integer, 5>{1, 2, 0, -4, -9});
  CHECK(k.P == pt(Rational(-9, 4), Rational(9, 8)));
  CHECK(k.E.disc == 289);
  auto c = classify_two_torsion(k.E, k.P);
  CHECK(c.ramified);
  CHECK(c.odd);
  CHECK_THROWS_AS(kramer_m1(1, 1), DomainError);
  CHECK_THROWS_AS(kramer_m1(1, 2), DomainError);    // a, b both positive
  CHECK_THROWS_AS(kramer_m1(-2, 3), DomainError);   // gcd(-9, 3) = 3
  auto m = kramer_m4(1, 5);
  CHECK(m.P == pt(623, 0));
  auto [mn, ch] = minimal_model(m.E);
  CHECK(mn.disc == kramer_m4_discriminant(1, 5));
  CHECK(mn.disc < 0);
  CHECK_THROWS_AS(kramer_m4(1, 3), DomainError);
  CHECK_THROWS_AS(kramer_m4(3, 3), DomainError);
  CHECK_THROWS_AS(kramer_m4(2, 6), DomainError);
  CHECK_THROWS_AS(kramer_m4(3, 15), DomainError);
}

TEST_CASE("Kramer m=4 minimal discriminants") {
  for (auto [c, d] : std::vector<std::pair<long, long>>{{1, 5}, {5, 1}, {3, 7}, {7, 3}, {1, 9}, {5, 9}, {3, 11}}) {
    auto m = kramer_m4(c, d);
    CHECK(minimal_model(m.E).first.disc == kramer_m4_discriminant(c, d));
  }
}

TEST_CASE("Velu 2-isogenies") {
  auto phi = velu_2isogeny(E15a3.rational_ainvs(), pt(1, -1));
  auto T = invariants(phi.target);
  CHECK(T.disc != 0);
  auto d = dual_isogeny(phi);
  for (auto& P : torsion(E15a3).points) CHECK(d.compose(P) == multiply(E15a3.rational_ainvs(), P, 2));
  auto k = kramer_m1(-2, 1);
  auto psi = velu_2isogeny(k.E.rational_ainvs(), k.P);
  CHECK(psi(k.P).infinity);
  CHECK(invariants(psi.target).disc != 0);
  CHECK_THROWS_AS(velu_2isogeny(E15a3.rational_ainvs(), RationalPoint::at_infinity()), DomainError);
  CHECK_THROWS_AS(velu_2isogeny(E15a3.rational_ainvs(), pt(0, 1)), DomainError);
}

TEST_CASE("195 isogeny class: propagated bounds match the mu row") {
  auto C = two_isogeny_class(E195a2, "E");
  REQUIRE(C.curves.size() == 8);
  // (|T|, c3, c5, c13) -> mu, from the class table
  std::map<std::array<long, 4>, long> table = {{{4, 4, 1, 1}, 0}, {{8, 8, 2, 2}, 1}, {{8, 4, 4, 4}, 2},
                                               {{4, 16, 1, 1}, 2}, {{4, 2, 8, 2}, 3}, {{4, 2, 2, 8}, 3},
                                               {{2, 1, 4, 1}, 4}, {{2, 1, 16, 1}, 4}};
  std::set<std::array<long, 4>> hit;
  for (size_t i = 0; i < C.curves.size(); ++i) {
    auto& F = C.curves[i];
    std::array<long, 4> key{torsion(F).order(), tate_local(F, 3).tamagawa, tate_local(F, 5).tamagawa,
                            tate_local(F, 13).tamagawa};
    REQUIRE(table.count(key));
    hit.insert(key);
    INFO(C.names[i], " ", F.to_string());
    CHECK(mu_lower_bound(C.names[i], 2, C.edges).lower_bound == table[key]);
  }
  CHECK(hit.size() == 8);
  CHECK(mu_lower_bound("E1", 2, C.edges).lower_bound >= 1);
}

TEST_CASE("lower bound with declared kernels") {
  std::vector<IsogenyEdge> edges{{"768d3", "768d1", 5, {5, 1, true, true, Provenance::input, ""}}};
  CHECK(mu_lower_bound("768d3", 5, edges).lower_bound == 1);
  CHECK(mu_lower_bound("768d1", 5, edges).lower_bound == 0);
  CHECK(mu_lower_bound("11a1", 5, {}).lower_bound == 0);
  edges.push_back({"768d1", "768d3", 5, {5, 1, true, true, Provenance::input, ""}});
  CHECK_THROWS_AS(mu_lower_bound("768d3", 5, edges), DomainError);
  std::vector<IsogenyEdge> bad{{"A", "B", 5, {5, 1, true, true, Provenance::input, ""}},
                               {"A", "B", 5, {5, 1, false, true, Provenance::input, ""}}};
  CHECK_THROWS_AS(mu_lower_bound("A", 5, bad), DomainError);
  std::vector<IsogenyEdge> wrong{{"A", "B", 25, {5, 1, true, true, Provenance::input, ""}}};
  CHECK_THROWS_AS(mu_lower_bound("A", 5, wrong), DomainError);
}

TEST_CASE("property: Kramer m=1 sweep is always ramified and odd") {
  int count = 0;
  for (long a = -12; a <= 12 && count < 50; ++a)
    for (long b = -9; b <= 9 && count < 50; b += 2) {
      Integer e = 4 * a - 1;
      if (b == 0 || gcd(e, Integer(b)) != 1 || e * e <= 64 * b || (a >= 0 && b >= 0)) continue;
      auto k = kramer_m1(a, b);
      auto c = classify_two_torsion(k.E, k.P);
      INFO("a=", a, " b=", b);
      CHECK(c.ramified);
      CHECK(c.odd);
      ++count;
    }
  CHECK(count == 50);
}

TEST_CASE("property: exactly one odd point when Delta > 0 with full 2-torsion") {
  for (auto& E : {E15a3, E195a2, C(1, 1, 1, -80, 242), C(1, 1, 1, -10, -10)}) {
    auto pts = two_torsion_points(E);
    if (pts.size() != 3 || E.disc < 0) continue;
    int odd = 0;
    for (auto& P : pts) odd += classify_two_torsion(E, P).odd;
    CHECK(odd == 1);
  }
}

TEST_CASE("property: propagation is monotone in the edge set") {
  auto C = two_isogeny_class(E195a2, "E");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<IsogenyEdge> sub;
    for (auto& e : C.edges)
      if (rng() % 2) sub.push_back(e);
    for (auto& n : C.names) CHECK(mu_lower_bound(n, 2, sub).lower_bound <= mu_lower_bound(n, 2, C.edges).lower_bound);
  }
}

TEST_CASE("property: dual after Velu is doubling on random points") {
  std::mt19937_64 rng(23);
  int curves = 0;
  while (curves < 10) {
    auto r = [&](long n) { return long(rng() % (2 * n + 1)) - n; };
    // y^2 + a1 x y = x^3 + a2 x^2 + a4 x has (0,0) of order 2; choose a4 so that (x1, y1) lies on it
    Rational a1(r(1)), a2(r(3)), x1 = Rational(r(6)) / long(1 + rng() % 3), y1 = Rational(r(9)) / long(1 + rng() % 2);
    if (x1 == 0) continue;
    Rational a4 = (y1 * y1 + a1 * x1 * y1 - x1 * x1 * x1 - a2 * x1 * x1) / x1;
    AInvs a{a1, a2, 0, a4, 0};
    if (invariants(a).disc == 0) continue;
    auto Q = pt(x1, y1);
    if (point_order(a, Q, 12)) continue;
    ++curves;
    auto d = dual_isogeny(velu_2isogeny(a, pt(0, 0)));
    for (long k = 1; k <= 20; ++k) {
      auto P = multiply(a, Q, k % 5 + 1);
      if (k > 5) P = add(a, P, multiply(a, Q, -(k % 3)));
      CHECK(on_curve(d.phi.target, d.phi(P)));
      CHECK(d.compose(P) == multiply(a, P, 2));
    }
  }
}
