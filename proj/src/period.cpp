#include <cmath>
#include <complex>

#include "iwasawa/local.hpp"
#include "iwasawa/torsion.hpp"

namespace iwasawa::ec {

namespace {

using Real = long double;

Real agm(Real a, Real b, Real tol) {
  for (int i = 0; i < 200; ++i) {
    if (std::fabs(a - b) <= tol * std::fabs(a)) return a;
    Real m = (a + b) / 2;
    b = std::sqrt(a * b);
    a = m;
  }
  throw PrecisionError("AGM did not converge within the iteration cap");
}

Real to_real(const Integer& z) { return std::stold(z.get_str()); }

}  // namespace

double real_period(const WeierstrassCurve& E0, double tol) {
  WeierstrassCurve E = minimal_model(E0).first;
  // roots of x^3 + (b2/4) x^2 + (b4/2) x + b6/4
  Real A = to_real(E.b2) / 4, B = to_real(E.b4) / 2, C = to_real(E.b6) / 4;
  auto f = [&](Real x) { return ((x + A) * x + B) * x + C; };
  auto df = [&](Real x) { return (3 * x + 2 * A) * x + B; };
  auto polish = [&](Real x) {
    for (int i = 0; i < 100; ++i) {
      Real d = df(x);
      if (d == 0) break;
      Real nx = x - f(x) / d;
      if (nx == x) break;
      x = nx;
    }
    return x;
  };
  const Real pi = std::acos(Real(-1));
  Real eps = static_cast<Real>(tol) * 1e-3L;
  // depressed cubic t^3 + p t + q with x = t - A/3
  Real p = B - A * A / 3, q = 2 * A * A * A / 27 - A * B / 3 + C;
  if (E.disc > 0) {
    Real m = 2 * std::sqrt(-p / 3);
    Real arg = std::clamp<Real>(3 * q / (p * m), -1, 1);
    Real th = std::acos(arg) / 3;
    Real e[3];
    for (int k = 0; k < 3; ++k) e[k] = polish(m * std::cos(th - 2 * pi * k / 3) - A / 3);
    std::sort(e, e + 3, std::greater<Real>());
    Real w = pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]), eps);
    return static_cast<double>(2 * w);
  }
  Real disc = q * q / 4 + p * p * p / 27;
  Real s = std::sqrt(std::max<Real>(disc, 0));
  Real e1 = polish(std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s) - A / 3);
  Real b2 = to_real(E.b2), b4 = to_real(E.b4);
  Real a = 3 * e1 + b2 / 4;
  Real b = std::sqrt(3 * e1 * e1 + b2 / 2 * e1 + b4 / 2);
  return static_cast<double>(2 * pi / agm(2 * std::sqrt(b), std::sqrt(2 * b + a), eps));
}

}  // namespace iwasawa::ec
