#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/curve.hpp"

namespace iwasawa::mu {

using ec::AInvs;
using ec::RationalPoint;
using ec::WeierstrassCurve;

enum class Provenance { computed, input };
const char* to_string(Provenance p);

struct KernelClass {
  long p = 2;
  long m = 1;  // order p^m
  bool ramified = false;
  bool odd = false;
  Provenance provenance = Provenance::input;
  std::string note;
};

struct IsogenyEdge {
  std::string from, to;
  long degree = 0;
  KernelClass kernel;
};

struct MuVerdict {
  long lower_bound = 0;
  bool zero_certified = false;
  std::string rule;
  std::vector<std::string> chain;  // curves along the ramified-odd path
};

struct TwoTorsionClass {
  bool ramified;
  bool odd;
};

// P must be a rational point of order 2; reduction at 2 good ordinary or multiplicative.
TwoTorsionClass classify_two_torsion(const WeierstrassCurve& E, const RationalPoint& P);

struct TwoIsogeny {
  AInvs source, target;
  RationalPoint kernel;
  Rational t;

  RationalPoint operator()(const RationalPoint& Q) const;
};

TwoIsogeny velu_2isogeny(const AInvs& E, const RationalPoint& P);

struct DualPair {
  TwoIsogeny phi, dual;
  ec::ModelChange to_source;  // dual.target -> phi.source
  RationalPoint compose(const RationalPoint& Q) const;  // dual after phi, on the source model
};

// Dual of a 2-isogeny, normalised so that compose equals doubling.
DualPair dual_isogeny(const TwoIsogeny& phi);

struct IsogenyClass {
  std::vector<std::string> names;
  std::vector<WeierstrassCurve> curves;  // global minimal models
  std::vector<IsogenyEdge> edges;
  std::vector<std::string> notes;
};

// Closure of {E} under rational 2-isogenies; names are prefix + index.
IsogenyClass two_isogeny_class(const WeierstrassCurve& E, const std::string& prefix = "E", size_t max_curves = 16);

MuVerdict mu_lower_bound(const std::string& curve, long p, const std::vector<IsogenyEdge>& edges);
MuVerdict mu_zero_certificate(long p, const KernelClass& kernel);

struct KramerCurve {
  WeierstrassCurve E;
  RationalPoint P;
};

KramerCurve kramer_m1(const Integer& a, const Integer& b);
KramerCurve kramer_m4(const Integer& c, const Integer& d);
// (c^4 - d^4) c^4 d^16 / 16
Integer kramer_m4_discriminant(const Integer& c, const Integer& d);

}  // namespace iwasawa::mu
