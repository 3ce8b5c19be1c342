#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/arith.hpp"

namespace iwasawa::ec {

using AInvs = std::array<Rational, 5>;  // a1, a2, a3, a4, a6

struct WeierstrassCurve {
  Integer a1, a2, a3, a4, a6;
  Integer b2, b4, b6, b8, c4, c6, disc;
  Rational j;

  std::array<Integer, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
  AInvs rational_ainvs() const;
  std::string to_string() const;  // "[a1,a2,a3,a4,a6]"
  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) { return a.ainvs() == b.ainvs(); }
};

// Throws DomainError on a singular curve.
WeierstrassCurve curve_invariants(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, const Integer& a6);
WeierstrassCurve curve_invariants(const std::array<Integer, 5>& a);
WeierstrassCurve parse_curve(const std::string& ainvs);  // "[0,-1,1,-10,-20]"

struct Invariants {
  Rational b2, b4, b6, b8, c4, c6, disc;
};
Invariants invariants(const AInvs& a);

struct RationalPoint {
  bool infinity = true;
  Rational x, y;

  static RationalPoint at_infinity() { return {}; }
  static RationalPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  std::string to_string() const;
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
  }
};

bool on_curve(const AInvs& a, const RationalPoint& P);
RationalPoint negate(const AInvs& a, const RationalPoint& P);
RationalPoint add(const AInvs& a, const RationalPoint& P, const RationalPoint& Q);
RationalPoint multiply(const AInvs& a, const RationalPoint& P, long n);
// order of P if it is at most bound, else nullopt
std::optional<long> point_order(const AInvs& a, const RationalPoint& P, long bound = 12);

// Checked wrappers on integral curves; throw DomainError for points off the curve.
RationalPoint point_add(const WeierstrassCurve& E, const RationalPoint& P, const RationalPoint& Q);
RationalPoint point_mul(const WeierstrassCurve& E, const RationalPoint& P, long n);

// x = u^2 x' + r,  y = u^3 y' + u^2 s x' + t
struct ModelChange {
  Rational u = 1, r = 0, s = 0, t = 0;

  AInvs apply(const AInvs& a) const;
  RationalPoint map_point(const RationalPoint& P) const;      // old -> new
  RationalPoint pull_back(const RationalPoint& P) const;      // new -> old
  ModelChange then(const ModelChange& next) const;            // this, then next
  ModelChange inverse() const;
};

WeierstrassCurve to_integral(const AInvs& a);  // throws if any a_i is not an integer
// Scales a rational model to an integral one; the change maps a to the result.
std::pair<WeierstrassCurve, ModelChange> integral_model(const AInvs& a);
// a1, a3 in {0,1}, a2 in {-1,0,1} by a unimodular change.
std::pair<WeierstrassCurve, ModelChange> standard_form(const WeierstrassCurve& E);
std::optional<ModelChange> find_isomorphism(const AInvs& from, const AInvs& to);

// Global minimal model in standard form, with the change from E.
std::pair<WeierstrassCurve, ModelChange> minimal_model(const WeierstrassCurve& E);

// y^2 = x^3 - 27 c4 x - 54 c6
WeierstrassCurve short_model(const WeierstrassCurve& E);
ModelChange short_model_change(const WeierstrassCurve& E);

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& d);

std::vector<Integer> bad_primes(const WeierstrassCurve& E);

}  // namespace iwasawa::ec
