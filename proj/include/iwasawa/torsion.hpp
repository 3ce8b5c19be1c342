#pragma once

#include <vector>

#include "iwasawa/curve.hpp"

namespace iwasawa::ec {

struct TorsionGroup {
  std::vector<long> invariants;           // cyclic factor orders, e.g. {2, 4}; empty = trivial
  std::vector<RationalPoint> generators;  // one per factor, on the input model
  std::vector<RationalPoint> points;      // every torsion point including O

  long order() const;
  std::string structure() const;  // "Z/2 x Z/4", "0"
};

TorsionGroup torsion(const WeierstrassCurve& E);

// gcd of #E(F_l) over the three smallest primes l > 3 of good reduction.
long torsion_bound(const WeierstrassCurve& E);

// Rational points of exact order 2.
std::vector<RationalPoint> two_torsion_points(const WeierstrassCurve& E);

// Integer roots of x^3 + a x^2 + b x + c.
std::vector<Integer> integer_cubic_roots(const Integer& a, const Integer& b, const Integer& c);

double real_period(const WeierstrassCurve& E, double tol = 1e-12);

}  // namespace iwasawa::ec
