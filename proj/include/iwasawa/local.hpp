#pragma once

#include <optional>
#include <string>

#include "iwasawa/curve.hpp"

namespace iwasawa::ec {

enum class Reduction { good, multiplicative_split, multiplicative_nonsplit, additive };
const char* to_string(Reduction r);

struct LocalData {
  long ell = 0;
  Reduction kind = Reduction::good;
  long tamagawa = 1;
  long ord_disc = 0;                // of an ell-minimal model
  std::optional<long> ord_j;        // nullopt when j = 0
  long conductor_exponent = 0;
  std::string kodaira;
  std::optional<long> ap;           // good reduction only
  bool ordinary = false;
  bool supersingular = false;
  bool anomalous = false;
  WeierstrassCurve minimal;         // ell-minimal model
  ModelChange change;               // from the input model to `minimal`

  bool multiplicative() const { return kind == Reduction::multiplicative_split || kind == Reduction::multiplicative_nonsplit; }
};

// Largest prime accepted by point counting.
inline constexpr long kDefaultCountBound = 100000;

LocalData tate_local(const WeierstrassCurve& E, long ell, long count_bound = kDefaultCountBound);

// -c4/c6 is a square in Q_ell (decides split multiplicative reduction).
bool split_by_c4c6(const WeierstrassCurve& E, long ell);

// #E(F_p) of the reduction of an integral model with good reduction at p.
Integer count_points(const WeierstrassCurve& E, long p);
long ap_count(const WeierstrassCurve& E, long p, long count_bound = kDefaultCountBound);

struct PClass {
  long ap;
  bool supersingular;
  bool anomalous;
  bool ordinary() const { return !supersingular; }
};
PClass classify_at_p(const WeierstrassCurve& E, long p);

// number of roots in F_p of a polynomial with integer coefficients (ascending)
long count_roots_mod_p(std::vector<Integer> f, long p);

}  // namespace iwasawa::ec
