#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iwasawa/numfield.hpp"

using namespace iwasawa;
using namespace iwasawa::nf;

static const ec::AInvs E306 = ec::curve_invariants(1, -1, 0, -927, 11097).rational_ainvs();
static const ec::AInvs E34 = ec::curve_invariants(1, 0, 0, -3, 1).rational_ainvs();
static const ec::AInvs E195s{0, 1, 0, -1840, 25088};

TEST_CASE("field arithmetic") {
  auto K = NumberField::make({-2, 0, 1});
  auto x = NFElement::generator(K);
  CHECK(x * x == NFElement(K, 2));
  CHECK(x.inverse() == x * NFElement(K, Rational(1, 2)));
  CHECK(nf_arith(x, x, NFOp::mul) == NFElement(K, 2));
  CHECK(nf_arith(x, x, NFOp::add) == NFElement(K, 2) * x);
  CHECK_THROWS_AS(NFElement(K, 0).inverse(), DomainError);
  auto B = NumberField::make({1, -3, 0, 1});
  auto b = NFElement::generator(B);
  CHECK(b * b * b == NFElement(B, 3) * b - NFElement(B, 1));
  CHECK((b * b + b).inverse() * (b * b + b) == NFElement(B, 1));
  CHECK_THROWS_AS(x + b, DomainError);
  CHECK(NumberField::make({1, -3, 0, 1})->to_string() == "x^3 - 3x + 1");
  CHECK(x.to_string() == "x");
  CHECK((NFElement(B, 3) * b * b - b + NFElement(B, Rational(1, 2))).to_string() == "3*x^2 - x + 1/2");
}

TEST_CASE("irreducibility screening") {
  CHECK(is_irreducible_small({-2, 0, 1}));
  CHECK_FALSE(is_irreducible_small({-4, 0, 1}));
  CHECK(is_irreducible_small({1, -3, 0, 1}));
  CHECK(is_irreducible_small({2, 0, -4, 0, 1}));
  CHECK_FALSE(is_irreducible_small({1, 0, -3, 0, 1}));   // (x^2 - x - 1)(x^2 + x - 1)
  CHECK_FALSE(is_irreducible_small({4, 0, 0, 0, 1}));    // (x^2 - 2x + 2)(x^2 + 2x + 2)
  CHECK(is_irreducible_small({-2, 0, 0, 0, 1}));         // x^4 - 2
  CHECK_THROWS_AS(NumberField::make({-1, 0, 1}), DomainError);
  CHECK_THROWS_AS(NumberField::make({1, 2}), DomainError);  // not monic
}

TEST_CASE("points from the worked examples") {
  auto B = NumberField::make({1, -3, 0, 1});
  auto b = NFElement::generator(B);
  auto q = [&](long v) { return NFElement(B, Rational(v)); };
  auto Q = NFPoint::affine(q(-6) * b * b + q(9) * b + q(15), q(15) * b * b - q(48) * b + q(9));
  CHECK(on_curve(E306, Q));
  CHECK(multiply(E306, Q, 3) == NFPoint::affine(q(9), q(54)));
  CHECK(on_curve(E34, NFPoint::affine(b, -b)));
  CHECK(add(E34, NFPoint::affine(b, -b), NFPoint::at_infinity()) == NFPoint::affine(b, -b));
  CHECK_THROWS_AS(add(E34, NFPoint::affine(b, b), NFPoint::at_infinity()), DomainError);
  for (auto& r : verify_worked_points()) {
    INFO(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("Galois action") {
  auto F = NumberField::make({-2, 0, 1});
  auto s = NFElement::generator(F);
  auto P = NFPoint::affine(NFElement(F, 0), NFElement(F, 7) * s);
  CHECK(galois_apply(P, -s) == NFPoint::affine(NFElement(F, 0), NFElement(F, -7) * s));
  CHECK(galois_apply(P, s) == P);
  auto K = NumberField::make({2, 0, -4, 0, 1});
  auto t = NFElement::generator(K);
  CHECK(galois_apply(t * t, -t) == t * t);
  CHECK_THROWS_AS(galois_apply(t, t * t), DomainError);
  // x -> x^3 - 3x is an automorphism of order 4 of this cyclic quartic field
  auto h = t * t * t - NFElement(K, 3) * t;
  CHECK(galois_apply(t, h) == h);
  CHECK_THROWS_AS(trace_to_subfield(E195s, NFPoint::at_infinity(), h), DomainError);
  // a rational point: trace is 2P
  auto E = ec::curve_invariants(1, -1, 0, -927, 11097).rational_ainvs();
  auto Pr = NFPoint::affine(NFElement(F, 9), NFElement(F, 54));
  CHECK(trace_to_subfield(E, Pr, -s) == multiply(E, Pr, 2));
}

static NFPoint random_point(const ec::AInvs& a, const std::vector<NFPoint>& gens, std::mt19937_64& rng) {
  NFPoint P = NFPoint::at_infinity();
  for (auto& g : gens) P = add(a, P, multiply(a, g, long(rng() % 5) - 2));
  return P;
}

TEST_CASE("property: associativity and Galois compatibility") {
  std::mt19937_64 rng(101);
  auto B = NumberField::make({1, -3, 0, 1});
  auto b = NFElement::generator(B);
  auto q = [&](long v) { return NFElement(B, Rational(v)); };
  std::vector<NFPoint> g306{NFPoint::affine(q(-6) * b * b + q(9) * b + q(15), q(15) * b * b - q(48) * b + q(9))};
  std::vector<NFPoint> g34{NFPoint::affine(b, -b), NFPoint::affine(q(0), q(1))};
  REQUIRE(on_curve(E34, g34[1]) == true);
  for (auto [a, gens] : std::vector<std::pair<ec::AInvs, std::vector<NFPoint>>>{{E306, g306}, {E34, g34}}) {
    for (int i = 0; i < 20; ++i) {
      auto P = random_point(a, gens, rng), Q = random_point(a, gens, rng), R = random_point(a, gens, rng);
      CHECK(add(a, add(a, P, Q), R) == add(a, P, add(a, Q, R)));
    }
  }
  // sigma: b -> b^2 - 2 generates the cyclic cubic Galois group
  auto h = b * b - q(2);
  for (int i = 0; i < 20; ++i) {
    auto P = random_point(E34, g34, rng), Q = random_point(E34, g34, rng);
    CHECK(galois_apply(add(E34, P, Q), h) == add(E34, galois_apply(P, h), galois_apply(Q, h)));
  }
  auto F = NumberField::make({-2, 0, 1});
  auto s = NFElement::generator(F);
  auto f = [&](long v) { return NFElement(F, Rational(v)); };
  auto P = NFPoint::affine(f(0), f(112) * s);
  std::vector<NFPoint> gF{P, NFPoint::affine(f(16), f(0))};
  for (int i = 0; i < 20; ++i) {
    auto X = random_point(E195s, gF, rng);
    auto T = trace_to_subfield(E195s, X, -s);
    CHECK(galois_apply(T, -s) == T);
  }
}
