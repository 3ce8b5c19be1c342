#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iwasawa/padic.hpp"

using namespace iwasawa;
using namespace iwasawa::padic;

TEST_CASE("arithmetic examples") {
  PadicNumber a(5, 5, 30), b(5, Rational(1, 5), 30);
  auto c = a * b;
  CHECK(c.valuation() == Valuation(0));
  CHECK(c.lift() == 1);

  PadicNumber four(3, 4, 30);
  auto sq = four * four;
  CHECK(sq.valuation() == Valuation(0));
  CHECK(sq.unit() == 16);

  auto s = PadicNumber(5, 10, 30) + PadicNumber(5, 15, 30);
  CHECK(s.valuation() == Valuation(2));
  CHECK(s.lift() == 25);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(PadicNumber(4, 1, 10), DomainError);
  CHECK_THROWS_AS(PadicNumber(3, 1, 10) + PadicNumber(5, 1, 10), DomainError);
  auto z = PadicNumber(3, 1, 10) - PadicNumber(3, 1, 10);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(PadicNumber(3, 1, 10) / z, DomainError);
  CHECK_THROWS_AS(PadicNumber(3, 1, 0), PrecisionError);
}

TEST_CASE("cancellation loses precision") {
  PadicNumber x(3, 1, 10), y(3, Rational(1 + 81), 10);
  auto d = y - x;
  CHECK(d.valuation() == Valuation(4));
  CHECK(d.absolute_precision() == 10);
  CHECK(d.precision() == 6);
}

TEST_CASE("valuation type") {
  CHECK((Valuation::infinity() + Valuation(3)).is_infinite());
  CHECK(Valuation(2) < Valuation::infinity());
  CHECK(min(Valuation(4), Valuation(2)) == Valuation(2));
  CHECK_THROWS(Valuation::infinity().value());
}

TEST_CASE("unit decomposition") {
  auto d = unit_decompose(PadicNumber(5, 2, 30));
  Integer m = ipow(5, 30);
  CHECK(mod(d.teichmuller, 5) == 2);
  Integer w4;
  mpz_powm_ui(w4.get_mpz_t(), d.teichmuller.get_mpz_t(), 4, m.get_mpz_t());
  CHECK(w4 == 1);
  CHECK(mod(Integer(d.teichmuller * d.principal.unit() - 2), m) == 0);
  CHECK(mod(Integer(d.principal.unit() - 1), 5) == 0);

  auto one = unit_decompose(PadicNumber(3, 1, 20));
  CHECK(one.teichmuller == 1);
  CHECK(one.principal.lift() == 1);

  auto m1 = unit_decompose(PadicNumber(2, -1, 20));
  CHECK(mod(Integer(m1.teichmuller + 1), ipow(2, 20)) == 0);
  CHECK(m1.principal.lift() == 1);

  CHECK_THROWS_AS(unit_decompose(PadicNumber(3, 3, 10)), DomainError);
}

TEST_CASE("iwasawa log") {
  CHECK(iwasawa_log(PadicNumber(5, 5, 30)).is_zero());
  Integer zeta = teichmuller(2, 5, 30);
  CHECK(iwasawa_log(PadicNumber(5, Rational(zeta), 30)).is_zero());

  // exp(log 4) recovers the principal part of 4
  auto L = iwasawa_log(PadicNumber(3, 4, 30));
  auto e = detail::exp(L);
  auto princ = unit_decompose(PadicNumber(3, 4, 30)).principal;
  CHECK(e.agrees_with(princ));
  CHECK(L.valuation() == Valuation(1));

  auto L2 = iwasawa_log(PadicNumber(2, 5, 30));
  CHECK(L2.valuation() == Valuation(2));
  CHECK(detail::exp(L2).agrees_with(PadicNumber(2, 5, 30)));
}

TEST_CASE("property: teichmuller multiplicative, log homomorphism") {
  std::mt19937_64 rng(7);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (long N : {5L, 12L, 30L}) {
      Integer m = ipow(p, N);
      for (int trial = 0; trial < 20; ++trial) {
        Integer x = rng() % 100000 + 1, y = rng() % 100000 + 1;
        if (mod(x, p) == 0) x += 1;
        if (mod(y, p) == 0) y += 1;
        Integer tx = teichmuller(x, p, N), ty = teichmuller(y, p, N), txy = teichmuller(x * y, p, N);
        CHECK(mod(Integer(txy - tx * ty), m) == 0);
        PadicNumber X(p, Rational(x), N), Y(p, Rational(y), N);
        CHECK((iwasawa_log(X * Y) - (iwasawa_log(X) + iwasawa_log(Y))).is_zero());
        PadicNumber Xk = X;
        for (long k = 2; k <= 10; ++k) {
          Xk = Xk * X;
          auto lhs = iwasawa_log(Xk);
          auto rhs = PadicNumber(p, k, N) * iwasawa_log(X);
          CHECK((lhs - rhs).is_zero());
        }
      }
    }
  }
}

TEST_CASE("property: valuation rules") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
    Rational a(Integer(long(rng() % 2000) - 1000), Integer(long(rng() % 50) + 1));
    Rational b(Integer(long(rng() % 2000) - 1000), Integer(long(rng() % 50) + 1));
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0) continue;
    PadicNumber x(p, a, 20), y(p, b, 20);
    CHECK((x * y).valuation() == x.valuation() + y.valuation());
    auto s = x + y;
    if (!s.is_zero()) {
      CHECK(min(x.valuation(), y.valuation()) <= s.valuation());
      if (!(x.valuation() == y.valuation())) CHECK(s.valuation() == min(x.valuation(), y.valuation()));
      if (a + b != 0) CHECK(s.valuation().value() == val(Rational(a + b), p));
    }
    CHECK(((x * y) / y).agrees_with(x));
  }
}
