#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iwasawa/lambda.hpp"

using namespace iwasawa;
using namespace iwasawa::lambda;

static LambdaElement L(long p, std::vector<Integer> c, long N = 30, long K = 40) {
  return LambdaElement(p, N, K, c);
}

TEST_CASE("parse and print") {
  auto f = LambdaElement::parse("p=3 N=30 K=40 coeffs=[3,3,1]");
  CHECK(f.prime() == 3);
  CHECK(f.to_string() == "p=3 N=30 K=40 coeffs=[3,3,1]");
  auto g = LambdaElement::parse("p=3 coeffs=[-3, 1]");
  CHECK(g.N() == 30);
  CHECK(g.centered()[0] == -3);
  CHECK_THROWS_AS(LambdaElement::parse("coeffs=[1]"), DomainError);
}

TEST_CASE("mu and lambda") {
  auto a = mu_lambda(L(5, {5}));
  CHECK(a.mu == 1);
  CHECK(a.lambda == 0);
  auto b = mu_lambda(L(3, {3, 3, 1}));
  CHECK(b.mu == 0);
  CHECK(b.lambda == 2);
  auto c = mu_lambda(L(7, {1}));
  CHECK(c.mu == 0);
  CHECK(c.lambda == 0);
  CHECK_THROWS_AS(mu_lambda(L(3, {0})), PrecisionError);
  CHECK_THROWS_AS(mu_lambda(L(3, {ipow(3, 30)})), PrecisionError);
}

TEST_CASE("weierstrass preparation") {
  auto a = weierstrass_prepare(L(3, {3, 3, 1}));
  CHECK(a.mu == 0);
  CHECK(a.d.centered() == std::vector<Integer>{3, 3, 1});
  CHECK(a.u == L(3, {1}, 30, 40));

  auto b = weierstrass_prepare(L(2, {4, 2}));
  CHECK(b.mu == 1);
  CHECK(b.d.centered() == std::vector<Integer>{2, 1});
  CHECK(b.u.with_precision(29, 40) == L(2, {1}, 29, 40));

  LambdaElement f = L(3, {3, 3, 0, 1});
  auto c = weierstrass_prepare(f);
  CHECK(c.mu == 0);
  CHECK(c.d.degree() == 3);
  for (int i = 0; i < 3; ++i) CHECK(mod(c.d.coeffs[i], 3) == 0);
  // reconstruction oracle: multiply back
  LambdaElement dd(3, c.d.precision, 40, c.d.coeffs);
  CHECK(dd * c.u == f.with_precision(c.d.precision, 40));
  CHECK_THROWS_AS(weierstrass_prepare(L(3, {0})), PrecisionError);
}

TEST_CASE("theta") {
  CHECK(theta(0, 3, 30, 40).value == L(3, {0, 1}));
  CHECK(theta(1, 3, 30, 40).value == L(3, {0, 3, 3, 1}));
  CHECK(theta(1, 2, 30, 40).value == L(2, {0, 2, 1}));
  CHECK_FALSE(theta(3, 3, 30, 40).truncated);
  CHECK(theta(4, 3, 30, 40).truncated);
  // theta_n | theta_m: Lambda/(theta_2) has theta_1 acting with kernel of rank 3
  auto q = quotient_order(theta(1, 3, 30, 40).value, 2);
  CHECK(q.free_rank == 3);
}

TEST_CASE("quotient orders") {
  auto a = quotient_order(L(3, {-3, 1}), 1);
  CHECK(a.free_rank == 0);
  CHECK(a.e_n == 2);
  auto b = quotient_order(L(3, {3, 3, 1}), 1);
  CHECK(b.free_rank == 2);
  CHECK(b.e_n == 0);
  auto c = quotient_order(L(3, {3}), 0);
  CHECK(c.free_rank == 0);
  CHECK(c.e_n == 1);
}

TEST_CASE("quotient order matches lifting-the-exponent oracle") {
  // |Z_3[T]/(theta_n, T-3)| = |theta_n(3)| = |4^{3^n} - 1|
  for (long n = 0; n <= 4; ++n) {
    auto q = quotient_order(L(3, {-3, 1}), n);
    Integer v = ipow(4, ipow(3, n).get_ui()) - 1;
    CHECK(q.e_n == val(v, 3));
  }
}

TEST_CASE("size bound") {
  setenv("IWASAWA_MAX_PN", "8", 1);
  CHECK_THROWS_AS(quotient_order(L(3, {-3, 1}), 2), BoundError);
  unsetenv("IWASAWA_MAX_PN");
  CHECK_NOTHROW(quotient_order(L(3, {-3, 1}), 2));
}

TEST_CASE("growth fit") {
  auto a = growth_fit(L(3, {-3, 1}), 3);
  CHECK(a.lambda == 1);
  CHECK(a.mu == 0);
  CHECK(a.nu == 1);
  CHECK(a.n0 == 0);
  CHECK(a.lambda0 == 0);

  auto b = growth_fit(L(3, {-9, 3}), 3);
  CHECK(b.lambda == 1);
  CHECK(b.mu == 1);
  CHECK(b.nu == 1);
  CHECK(b.lambda0 == 0);

  auto c = growth_fit(L(3, {3, 3, 1}), 3);
  CHECK(c.lambda == 0);
  CHECK(c.mu == 0);
  CHECK(c.nu == 0);
  CHECK(c.n0 == 1);
  CHECK(c.lambda0 == 2);

  CHECK_THROWS_AS(growth_fit(L(3, {-3, 1}), 1), DomainError);
}

TEST_CASE("involution") {
  auto it = involution(L(3, {0, 1}));
  for (long k = 1; k < 40; ++k) CHECK(it.centered()[k] == ((k % 2) ? -1 : 1));
  auto f = L(3, {3, 3, 1});
  auto inv = L(3, {1, 1}).inverse();
  CHECK(involution(f) == inv * inv * f);
  auto g = L(2, {2, 1});
  CHECK(involution(g) == L(2, {1, 1}).inverse() * g);
}

TEST_CASE("associates") {
  auto f = L(3, {3, 3, 1});
  CHECK(associates_check(f, involution(f)) == Verdict::yes);
  auto g = L(2, {2, 1});
  CHECK(associates_check(g, involution(g)) == Verdict::yes);
  auto h = L(3, {-3, 1});
  CHECK(associates_check(h, involution(h)) == Verdict::no);
}

TEST_CASE("mod p shape") {
  CHECK(mod_p_shape(L(3, {3, 3, 1})) == 2);
  CHECK(mod_p_shape(L(7, {1, 7})) == 0);
  CHECK(mod_p_shape(L(2, {2, 1})) == 1);
  CHECK_THROWS_AS(mod_p_shape(L(3, {3})), DomainError);
}

TEST_CASE("L_p evaluation") {
  auto k = default_kappa(5, 30);
  auto t = L(5, {0, 1});
  CHECK(evaluate_Lp(t, padic::PadicNumber(5, 1, 30), k).is_zero());
  auto v = evaluate_Lp(t, padic::PadicNumber(5, 2, 30), k);
  CHECK(v.agrees_with(padic::PadicNumber(5, 5, 30)));
  auto c = evaluate_Lp(L(5, {5}), padic::PadicNumber(5, 7, 30), k);
  CHECK(c.agrees_with(padic::PadicNumber(5, 5, 30)));
  CHECK_THROWS_AS(evaluate_Lp(t, padic::PadicNumber(5, 2, 30), padic::PadicNumber(5, 26, 30)), DomainError);
}

TEST_CASE("functional equation solver") {
  auto a = fe_solve(L(3, {0, 1}));
  REQUIRE(a.status == Verdict::yes);
  CHECK(a.w == -1);
  CHECK(a.c->centered_lift() == -1);

  auto b = fe_solve(L(3, {3, 3, 1}));
  REQUIRE(b.status == Verdict::yes);
  CHECK(b.w == 1);
  CHECK(b.c->centered_lift() == -2);

  auto c = fe_solve(L(5, {1}));
  REQUIRE(c.status == Verdict::yes);
  CHECK(c.w == 1);
  CHECK(c.c->is_zero());

  CHECK(fe_solve(L(3, {-3, 1})).status == Verdict::no);
}

TEST_CASE("characteristic ideals and generators") {
  auto P = [](long p, std::vector<std::vector<std::vector<Integer>>> m) {
    LambdaModulePresentation X{p, {}};
    for (auto& r : m) {
      std::vector<LambdaElement> row;
      for (auto& c : r) row.push_back(L(p, c));
      X.rows.push_back(row);
    }
    return X;
  };
  auto d = char_ideal(P(3, {{{3}, {0}}, {{0}, {0, 1}}}));
  CHECK(d == L(3, {0, 3}));
  auto ml = mu_lambda(d);
  CHECK(ml.mu == 1);
  CHECK(ml.lambda == 1);
  CHECK(char_ideal(P(3, {{{3, 3, 1}}})) == L(3, {3, 3, 1}));
  CHECK(char_ideal(P(5, {{{0, 1}, {5}}, {{0}, {0, 1}}})) == L(5, {0, 0, 1}));
  CHECK_THROWS_AS(char_ideal(P(3, {{{1}, {1}}, {{1}, {1}}})), PrecisionError);

  CHECK(min_generators(P(3, {{{3}, {0}}, {{0}, {3}}})) == 2);
  CHECK(min_generators(P(3, {{{3, 3, 1}}})) == 1);
  CHECK(min_generators(P(3, {{{1}, {0}}, {{0}, {1}}})) == 0);
}

TEST_CASE("property: mu and lambda additive, prepare roundtrip, involution") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    long p = std::vector<long>{2, 3, 5}[rng() % 3];
    auto rand_series = [&] {
      std::vector<Integer> c(6);
      long lam = rng() % 3;
      for (long i = 0; i < 6; ++i) c[i] = Integer(long(rng() % 50)) * (i < lam ? p : 1);
      if (mod(c[lam], p) == 0) c[lam] += 1;
      long mu = rng() % 2;
      for (auto& x : c) x *= ipow(p, mu);
      return L(p, c);
    };
    auto f = rand_series(), g = rand_series();
    auto a = mu_lambda(f), b = mu_lambda(g), ab = mu_lambda(f * g);
    CHECK(ab.mu == a.mu + b.mu);
    CHECK(ab.lambda == a.lambda + b.lambda);
    auto pr = weierstrass_prepare(f);
    long N = pr.d.precision;
    LambdaElement dd(p, N + pr.mu, 40, pr.d.coeffs);
    CHECK(ipow(p, pr.mu) * (dd * pr.u.with_precision(N + pr.mu, 40)) == f.with_precision(N + pr.mu, 40));
    CHECK(involution(involution(f)) == f);
  }
}

TEST_CASE("property: Smith form equals resultant valuation") {
  std::mt19937_64 rng(99);
  int compared = 0;
  for (int t = 0; t < 30; ++t) {
    long p = std::vector<long>{2, 3}[rng() % 2];
    std::vector<Integer> c(3);
    for (auto& x : c) x = Integer(long(rng() % 40) - 20);
    c[2] = 1;
    auto f = L(p, c);
    for (long n = 0; n <= 2; ++n) {
      auto q = quotient_order(f, n);
      auto rv = resultant_valuation(f, n);
      if (q.free_rank == 0) {
        REQUIRE(rv.has_value());
        CHECK(*rv == q.e_n);
        ++compared;
      } else {
        CHECK_FALSE(rv.has_value());
      }
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("property: generator inequality on diagonal presentations") {
  std::vector<std::vector<Integer>> entries = {{3}, {9}, {3, 3, 1}, {0, 1}, {-3, 1}};
  for (auto& a : entries)
    for (auto& b : entries) {
      LambdaModulePresentation X{3, {{L(3, a), L(3, {0})}, {L(3, {0}), L(3, b)}}};
      auto ml = mu_lambda(char_ideal(X));
      CHECK(min_generators(X) <= ml.mu + ml.lambda);
    }
}
