#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwasawa/local.hpp"

namespace iwasawa::selmer {

using ec::WeierstrassCurve;

struct GlobalAssumptions {
  long sel_valuation = 0;           // v_p |Sel_E(Q)_p|
  std::optional<long> rank;
  bool sel_finite = true;
  std::string provenance = "assumed";
};

struct LedgerEntry {
  std::string place;   // "11", "p=5", "Sel", "torsion"
  std::string kind;    // tamagawa, at_p, selmer, torsion
  long contribution;
  std::string note;
};

struct EulerReport {
  long p = 0;
  std::string reduction_at_p;
  std::vector<LedgerEntry> ledger;
  long total = 0;
  bool convention_dependent = false;
  std::string applicability;

  long sum() const;
};

EulerReport euler_char(const WeierstrassCurve& E, long p, const GlobalAssumptions& A, long digits = 30);

struct KernelOrder {
  long ell;
  std::string formula;
  long valuation;  // v_p of the kernel order
};

std::vector<KernelOrder> local_kernels(const WeierstrassCurve& E, long p, long digits = 30);

struct Condition {
  std::string name;
  bool satisfied;
  std::string detail;
};

struct CriterionResult {
  bool holds = false;
  std::vector<Condition> conditions;
  std::string clause;      // criterion_infinite: which clause fired
  std::string conclusion;
};

CriterionResult criterion_vanishing(const WeierstrassCurve& E, long p, const GlobalAssumptions& A);
CriterionResult criterion_infinite(const WeierstrassCurve& E, long p, const GlobalAssumptions& A);

struct ParityReport {
  Verdict consistent = Verdict::indeterminate;
  long corank_lower_bound = 0;
  bool injective = false;
  std::vector<std::string> notes;
};

bool potentially_supersingular(const WeierstrassCurve& E, long p);
ParityReport corank_parity(const WeierstrassCurve& E, long p, long lambda_E, long sel_corank);

struct DensityResult {
  bool excluded = false;
  std::string reason;
  bool anomalous = false;
};

DensityResult density_screen(const WeierstrassCurve& E, long p, std::optional<long> isogenous_q = std::nullopt);

long twist_lambda(long lambda_xi, const Integer& d);

// Two curves linked by an isogeny that shifts v_p(f_E(0)) by `shift`.  With
// finite Selmer groups of square order both totals would have to differ by
// an even amount.
struct IsogenyParityReport {
  EulerReport first, second;
  long shift;
  bool inconsistent;
  std::string conclusion;
};

IsogenyParityReport isogeny_parity(const WeierstrassCurve& E1, const WeierstrassCurve& E2, long p, long shift,
                                   long digits = 30);

}  // namespace iwasawa::selmer
