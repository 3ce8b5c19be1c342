#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/curve.hpp"

namespace iwasawa::forge {

using ec::WeierstrassCurve;

struct GoodTarget {
  long p;
  long ap;
};

struct MultTarget {
  long ell;
  int a;      // +1 split, -1 nonsplit
  long c;     // Tamagawa number
};

struct ForgeSpec {
  std::vector<GoodTarget> P;
  std::vector<MultTarget> L;
  std::vector<long> Q;

  void validate() const;  // throws DomainError
};

struct Witness {
  long q;
  long r;
  WeierstrassCurve curve;  // over F_r, coefficients in [0, r)
  long ar;
};

struct LedgerEntry {
  std::string clause;  // "good p=5", "mult l=3", "irreducible q=7"
  bool pass;
  std::string detail;
};

struct ForgeResult {
  WeierstrassCurve curve;
  std::vector<LedgerEntry> ledger;
  std::vector<Witness> witnesses;
  std::map<long, long> exponents;  // t_m
  bool verified() const;
};

inline constexpr long kDeuringPrimeBound = 100000;
inline constexpr long kMaxExponent = 64;

// A curve over F_p with a_p = a, found by seeded random search.
WeierstrassCurve deuring_search(long p, long a, std::uint64_t seed = 0, long max_tries = 1000000);

// Frobenius at r acts irreducibly on E[q]: t^2 - a_r t + r has no root mod q.
bool frobenius_irreducible(long q, long r, long ar);

// Smallest admissible r >= 5 (r != q, r not in `avoid`).
Witness irreducibility_witness(long q, const std::vector<long>& avoid = {});

// y^2 + xy = x^3 + a2 x^2 + l^c with the requested reduction type.
WeierstrassCurve tate_local_model(long ell, int a, long c);

bool verified_ledger(const std::vector<LedgerEntry>& ledger);

ForgeResult crt_assemble(const ForgeSpec& spec, std::uint64_t seed = 0);

// Witness primes are searched up to `witness_bound` when none are supplied.
std::vector<LedgerEntry> forge_verify(const WeierstrassCurve& E, const ForgeSpec& spec,
                                      const std::vector<Witness>& witnesses = {}, long witness_bound = 2000);

}  // namespace iwasawa::forge
