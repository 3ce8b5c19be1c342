#include "iwasawa/selmer.hpp"

#include <cmath>

#include "iwasawa/padic.hpp"
#include "iwasawa/tate_period.hpp"
#include "iwasawa/torsion.hpp"

namespace iwasawa::selmer {

using namespace ec;

namespace {

std::vector<LocalData> bad_data(const WeierstrassCurve& E) {
  std::vector<LocalData> out;
  for (auto& l : bad_primes(E)) {
    auto ld = tate_local(E, l.get_si(), 0);
    if (ld.kind != Reduction::good) out.push_back(ld);
  }
  return out;
}

long torsion_p_valuation(const WeierstrassCurve& E, long p) { return val(Integer(torsion(E).order()), p); }

// v_p(log_p q_E) - v_p(ord_p q_E) for split multiplicative reduction at p.
std::pair<long, long> split_log_data(const WeierstrassCurve& E, long p, long digits) {
  auto tp = tate_period(E, p, digits);
  auto lg = padic::iwasawa_log(tp.q);
  if (lg.is_zero()) throw PrecisionError("log_p(q_E) vanishes to the working precision");
  long vq = tp.q.valuation().value();
  return {lg.valuation().value(), val(Integer(vq), p)};
}

}  // namespace

long EulerReport::sum() const {
  long s = 0;
  for (auto& e : ledger) s += e.contribution;
  return s;
}

EulerReport euler_char(const WeierstrassCurve& E, long p, const GlobalAssumptions& A, long digits) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (!A.sel_finite) throw DomainError("Euler characteristic needs Sel_E(Q)_p finite");
  if (A.sel_valuation < 0) throw DomainError("v_p|Sel| must be nonnegative");
  EulerReport r;
  r.p = p;
  auto at = tate_local(E, p);
  r.reduction_at_p = to_string(at.kind);
  if (at.kind == Reduction::additive) throw DomainError("additive reduction at p");
  if (at.kind == Reduction::good && at.supersingular) throw DomainError("supersingular at p: use corank_parity");

  for (auto& ld : bad_data(E)) {
    if (ld.ell == p) continue;
    r.ledger.push_back({std::to_string(ld.ell), "tamagawa", val(Integer(ld.tamagawa), p),
                        "c=" + std::to_string(ld.tamagawa) + " " + ld.kodaira});
  }
  std::string pl = "p=" + std::to_string(p);
  if (at.kind == Reduction::good) {
    long n = p + 1 - *at.ap;
    r.ledger.push_back({pl, "at_p", 2 * val(Integer(n), p), "#E(F_p)=" + std::to_string(n)});
  } else {
    r.ledger.push_back({pl, "tamagawa", val(Integer(at.tamagawa), p), "c_p=" + std::to_string(at.tamagawa)});
    if (at.kind == Reduction::multiplicative_nonsplit) {
      r.ledger.push_back({pl, "at_p", val(Integer(2), p), "l_v=2"});
    } else {
      auto [vlog, vord] = split_log_data(E, p, digits);
      long v2p = val(Integer(2 * p), p);
      r.ledger.push_back({pl, "at_p", vlog - vord - v2p,
                          "v(log q)=" + std::to_string(vlog) + " v(ord q)=" + std::to_string(vord) +
                              " normalisation -v(2p)=" + std::to_string(-v2p)});
      r.convention_dependent = true;
    }
  }
  r.ledger.push_back({"Sel", "selmer", A.sel_valuation, A.provenance});
  long vt = torsion_p_valuation(E, p);
  r.ledger.push_back({"torsion", "torsion", -2 * vt, "v_p|E(Q)_tors|=" + std::to_string(vt)});
  r.total = r.sum();
  r.applicability = r.convention_dependent ? "holds up to the unit normalisation of l_v" : "holds";
  return r;
}

std::vector<KernelOrder> local_kernels(const WeierstrassCurve& E, long p, long digits) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  auto at = tate_local(E, p);
  if (at.kind == Reduction::additive) throw DomainError("additive reduction at p");
  if (at.kind == Reduction::good && at.supersingular) throw DomainError("supersingular at p");
  std::vector<KernelOrder> out;
  for (auto& ld : bad_data(E))
    if (ld.ell != p) out.push_back({ld.ell, "c_l", val(Integer(ld.tamagawa), p)});
  if (at.kind == Reduction::good) {
    out.push_back({p, "|E(F_p)_p|^2", 2 * val(Integer(p + 1 - *at.ap), p)});
  } else if (at.kind == Reduction::multiplicative_nonsplit) {
    if (p == 2)
      out.push_back({p, "2c_p", 1 + val(Integer(at.tamagawa), p)});
    else
      out.push_back({p, "trivial", 0});
  } else {
    auto [vlog, vord] = split_log_data(E, p, digits);
    (void)vord;
    out.push_back({p, "log_p(q)/2p", vlog - val(Integer(2 * p), p)});
  }
  return out;
}

namespace {

LocalData require_good_ordinary(const WeierstrassCurve& E, long p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  auto at = tate_local(E, p);
  if (at.kind != Reduction::good || at.supersingular) throw DomainError("needs good ordinary reduction at p");
  return at;
}

}  // namespace

CriterionResult criterion_vanishing(const WeierstrassCurve& E, long p, const GlobalAssumptions& A) {
  auto at = require_good_ordinary(E, p);
  CriterionResult r;
  long n = p + 1 - *at.ap;
  r.conditions.push_back({"p does not divide #E(F_p)", n % p != 0, "#E(F_p)=" + std::to_string(n)});
  for (auto& ld : bad_data(E))
    r.conditions.push_back({"p does not divide c_" + std::to_string(ld.ell), ld.tamagawa % p != 0,
                            "c=" + std::to_string(ld.tamagawa)});
  r.holds = true;
  for (auto& c : r.conditions) r.holds = r.holds && c.satisfied;
  if (!r.holds)
    r.conclusion = "criterion does not apply";
  else if (A.sel_valuation == 0)
    r.conclusion = "Sel_E(Q_inf)_p = 0 (given Sel_E(Q)_p = 0, " + A.provenance + ")";
  else
    r.conclusion = "Sel_E(Q_inf)_p = 0 would follow from Sel_E(Q)_p = 0";
  return r;
}

CriterionResult criterion_infinite(const WeierstrassCurve& E, long p, const GlobalAssumptions& A) {
  auto at = require_good_ordinary(E, p);
  if (torsion_p_valuation(E, p) > 0) throw DomainError("E(Q) has p-torsion");
  CriterionResult r;
  r.conditions.push_back({"(i) Sel_E(Q)_p nonzero", A.sel_valuation > 0, A.provenance});
  r.conditions.push_back({"(ii) a_p = 1 mod p", mod(Integer(*at.ap - 1), p) == 0, "a_p=" + std::to_string(*at.ap)});
  for (auto& ld : bad_data(E)) {
    std::string l = std::to_string(ld.ell);
    if (ld.multiplicative()) {
      long al = ld.kind == Reduction::multiplicative_split ? 1 : -1;
      bool fires = mod(Integer(al - 1), p) == 0 && ld.ord_j && *ld.ord_j % p == 0;
      r.conditions.push_back({"(iii) a_l = 1 and p | ord_l(j) at l=" + l, fires,
                              "ord_j=" + std::to_string(ld.ord_j.value_or(0)) + " c=" + std::to_string(ld.tamagawa)});
    } else {
      r.conditions.push_back({"(iv) p | c_l at additive l=" + l, ld.tamagawa % p == 0, "c=" + std::to_string(ld.tamagawa)});
    }
  }
  for (auto& c : r.conditions)
    if (c.satisfied) {
      r.holds = true;
      r.clause = c.name.substr(0, c.name.find(' '));
      break;
    }
  r.conclusion = r.holds ? "Sel_E(Q_inf)_p is infinite" : "no clause applies";
  return r;
}

bool potentially_supersingular(const WeierstrassCurve& E, long p) {
  auto at = tate_local(E, p);
  if (at.kind == Reduction::good) return at.supersingular;
  if (at.multiplicative() || (at.ord_j && *at.ord_j < 0)) return false;
  Integer j = reduce(E.j, p);
  WeierstrassCurve F;
  if (j == 0)
    F = p == 2 ? curve_invariants(0, 0, 1, 0, 0) : (p == 3 ? curve_invariants(0, 0, 0, -1, 0) : curve_invariants(0, 0, 0, 0, 1));
  else if (mod(Integer(j - 1728), p) == 0)
    F = curve_invariants(0, 0, 0, 1, 0);
  else {
    Integer k = inv_mod(Integer(j - 1728), p);
    F = curve_invariants(1, 0, 0, mod(Integer(-36 * k), p), mod(Integer(-k), p));
  }
  return mod(Integer(p + 1 - count_points(F, p)), p) == 0;
}

ParityReport corank_parity(const WeierstrassCurve& E, long p, long lambda_E, long sel_corank) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  ParityReport r;
  if (p == 2) {
    r.notes.push_back("parity clause needs p odd");
  } else {
    r.consistent = (sel_corank - lambda_E) % 2 == 0 ? Verdict::yes : Verdict::no;
    if (r.consistent == Verdict::no) r.notes.push_back("corank and lambda_E have different parity");
  }
  r.corank_lower_bound = potentially_supersingular(E, p) ? 1 : 0;
  if (r.corank_lower_bound) r.notes.push_back("potentially supersingular at p: Lambda-corank >= 1");
  auto at = tate_local(E, p);
  r.injective = p >= 3 && (at.multiplicative() || (at.kind == Reduction::good && !at.supersingular));
  if (r.injective) r.notes.push_back("Sel_E(Q_n)_p -> Sel_E(Q_inf)_p is injective");
  return r;
}

DensityResult density_screen(const WeierstrassCurve& E, long p, std::optional<long> isogenous_q) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  auto at = tate_local(E, p);
  if (at.kind != Reduction::good) throw DomainError("needs good reduction at p");
  DensityResult r;
  r.anomalous = at.anomalous;
  if (p > 5 && !two_torsion_points(E).empty()) {
    r.excluded = true;
    r.reason = "rational 2-torsion and p > 5";
  } else if (isogenous_q && *isogenous_q > 2 && *isogenous_q % p != 0) {
    long m = *isogenous_q * p - 1 - p;
    if (m > 0 && m * m > 4 * p) {
      r.excluded = true;
      r.reason = "q p > 1 + p + 2 sqrt(p) with q=" + std::to_string(*isogenous_q);
    }
  }
  if (!r.excluded) r.reason = "hypotheses absent";
  if (r.excluded && r.anomalous) throw Error("density screen contradicts the point count");
  return r;
}

long twist_lambda(long lambda_xi, const Integer& d) {
  if (d >= 0) throw DomainError("twist formula needs d < 0");
  if (d % 5 == 0) throw DomainError("twist formula needs 5 not dividing d");
  if (squarefree_part(d) != d) throw DomainError("d must be squarefree");
  if (lambda_xi < 0) throw DomainError("lambda_xi must be nonnegative");
  long eps = kronecker(d, 11) == 1 ? 1 : 0;
  return 2 * lambda_xi + eps;
}

IsogenyParityReport isogeny_parity(const WeierstrassCurve& E1, const WeierstrassCurve& E2, long p, long shift,
                                   long digits) {
  GlobalAssumptions A;
  A.provenance = "finite of square order (Cassels), even valuation";
  IsogenyParityReport r{euler_char(E1, p, A, digits), euler_char(E2, p, A, digits), shift, false, ""};
  long diff = r.second.total - r.first.total;
  r.inconsistent = ((diff - shift) % 2) != 0;
  r.conclusion = r.inconsistent ? "finite Selmer groups give an even difference against an odd shift: Sel_E(Q)_p is infinite"
                                : "no parity obstruction";
  return r;
}

}  // namespace iwasawa::selmer
