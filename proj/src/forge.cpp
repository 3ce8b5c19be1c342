#include "iwasawa/forge.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "iwasawa/local.hpp"
#include "iwasawa/torsion.hpp"

namespace iwasawa::forge {

using namespace ec;

namespace {

bool hasse_ok(long p, long a) { return a * a < 4 * p; }

std::optional<WeierstrassCurve> curve_mod(const std::array<Integer, 5>& a, long p) {
  std::array<Integer, 5> r;
  for (int i = 0; i < 5; ++i) r[i] = mod(a[i], p);
  try {
    auto E = curve_invariants(r);
    if (mod(E.disc, p) == 0) return std::nullopt;
    return E;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

void ForgeSpec::validate() const {
  std::set<long> seen;
  for (auto& t : P) {
    if (!is_prime(t.p)) throw DomainError("P entry is not prime: " + std::to_string(t.p));
    if (!hasse_ok(t.p, t.ap)) throw DomainError("|a_p*| must be < 2 sqrt(p) at p=" + std::to_string(t.p));
    if (!seen.insert(t.p).second) throw DomainError("repeated prime " + std::to_string(t.p));
  }
  for (auto& t : L) {
    if (!is_prime(t.ell)) throw DomainError("L entry is not prime: " + std::to_string(t.ell));
    if (t.a != 1 && t.a != -1) throw DomainError("a_l* must be +1 or -1");
    if (t.c < 1) throw DomainError("c_l* must be positive");
    if (t.a == -1 && t.c > 2) throw DomainError("a_l* = -1 needs c_l* in {1, 2}");
    if (!seen.insert(t.ell).second) throw DomainError("P and L must be disjoint at " + std::to_string(t.ell));
  }
  std::set<long> qs;
  for (long q : Q) {
    if (!is_prime(q)) throw DomainError("Q entry is not prime: " + std::to_string(q));
    if (!qs.insert(q).second) throw DomainError("repeated q " + std::to_string(q));
    if (q == 2 && seen.count(2)) throw DomainError("q = 2 cannot be combined with 2 in P or L");
  }
}

bool verified_ledger(const std::vector<LedgerEntry>& ledger) {
  return std::all_of(ledger.begin(), ledger.end(), [](const LedgerEntry& e) { return e.pass; });
}

bool ForgeResult::verified() const { return verified_ledger(ledger); }

WeierstrassCurve deuring_search(long p, long a, std::uint64_t seed, long max_tries) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (p > kDeuringPrimeBound) throw BoundError("p exceeds the point-counting bound");
  if (!hasse_ok(p, a)) throw DomainError("|a| must be < 2 sqrt(p)");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(p));
  for (long k = 0; k < max_tries; ++k) {
    std::array<Integer, 5> c;
    for (auto& x : c) x = static_cast<long>(rng() % static_cast<std::uint64_t>(p));
    auto E = curve_mod(c, p);
    if (E && ap_count(*E, p) == a) return *E;
  }
  throw BoundError("Deuring search exhausted its iteration cap");
}

bool frobenius_irreducible(long q, long r, long ar) {
  for (long t = 0; t < q; ++t)
    if (mod(Integer(t * t - ar * t + r), q) == 0) return false;
  return true;
}

Witness irreducibility_witness(long q, const std::vector<long>& avoid) {
  if (!is_prime(q)) throw DomainError("q must be prime");
  for (long r = 5;; r = next_prime(r)) {
    if (!is_prime(r) || r == q || std::find(avoid.begin(), avoid.end(), r) != avoid.end()) continue;
    std::optional<WeierstrassCurve> E;
    if (q == 2) {
      for (long b = 0; b < r && !E; ++b)
        for (long c = 1; c < r && !E; ++c)
          if (count_roots_mod_p({c, b, 0, 1}, r) == 0) E = curve_invariants(0, 0, 0, b, c);
    } else {
      if (kronecker(Integer(-r), Integer(q)) != -1) continue;
      if (r % 4 == 3)
        E = curve_invariants(0, 0, 0, 1, 0);
      else if (r % 3 == 2)
        E = curve_invariants(0, 0, 0, 0, 1);
      else
        for (long A = 1; A < r && !E; ++A)
          for (long B = 1; B < r && !E; ++B) {
            auto F = curve_mod({0, 0, 0, A, B}, r);
            if (F && ap_count(*F, r) == 0) E = F;
          }
    }
    if (!E) continue;
    long ar = ap_count(*E, r);
    if (!frobenius_irreducible(q, r, ar)) throw Error("witness curve fails the Frobenius test");
    return {q, r, *E, ar};
  }
}

WeierstrassCurve tate_local_model(long ell, int a, long c) {
  if (!is_prime(ell)) throw DomainError("l must be prime");
  if (a != 1 && a != -1) throw DomainError("a* must be +1 or -1");
  if (c < 1) throw DomainError("c* must be positive");
  if (a == -1 && c > 2) throw DomainError("a* = -1 needs c* in {1, 2}");
  Integer a2 = 0;
  if (a == -1) {
    if (ell == 2) {
      a2 = -1;
    } else {
      for (long k = 1; k < ell; ++k)
        if (kronecker(Integer(1 + 4 * k), Integer(ell)) == -1) {
          a2 = k;
          break;
        }
    }
  }
  return curve_invariants(1, a2, 0, 0, ipow(ell, c));
}

std::vector<LedgerEntry> forge_verify(const WeierstrassCurve& E, const ForgeSpec& spec,
                                      const std::vector<Witness>& witnesses, long witness_bound) {
  std::vector<LedgerEntry> out;
  for (auto& t : spec.P) {
    auto ld = tate_local(E, t.p);
    LedgerEntry e{"good p=" + std::to_string(t.p), false, ""};
    if (ld.kind != Reduction::good) {
      e.detail = std::string("reduction is ") + to_string(ld.kind);
    } else {
      e.pass = *ld.ap == t.ap;
      e.detail = "a_p=" + std::to_string(*ld.ap) + " target " + std::to_string(t.ap);
    }
    out.push_back(e);
  }
  for (auto& t : spec.L) {
    auto ld = tate_local(E, t.ell);
    LedgerEntry e{"mult l=" + std::to_string(t.ell), false, ""};
    Reduction want = t.a == 1 ? Reduction::multiplicative_split : Reduction::multiplicative_nonsplit;
    e.pass = ld.kind == want && ld.tamagawa == t.c;
    e.detail = std::string(to_string(ld.kind)) + " c=" + std::to_string(ld.tamagawa) + " ord_j=" +
               std::to_string(ld.ord_j.value_or(0));
    out.push_back(e);
  }
  for (long q : spec.Q) {
    LedgerEntry e{"irreducible q=" + std::to_string(q), false, "not certified"};
    std::vector<long> rs;
    for (auto& w : witnesses)
      if (w.q == q) rs.push_back(w.r);
    if (rs.empty())
      for (long r : primes_up_to(witness_bound))
        if (r != q) rs.push_back(r);
    for (long r : rs) {
      if (mod(E.disc, r) == 0) continue;
      long ar = ap_count(E, r);
      if (frobenius_irreducible(q, r, ar)) {
        e.pass = true;
        e.detail = "certified at r=" + std::to_string(r) + " a_r=" + std::to_string(ar);
        break;
      }
    }
    if (!e.pass) {
      auto T = torsion(E);
      if (T.order() % q == 0) e.detail = "not certified; reducible: rational point of order " + std::to_string(q);
    }
    out.push_back(e);
  }
  return out;
}

ForgeResult crt_assemble(const ForgeSpec& spec, std::uint64_t seed) {
  spec.validate();
  ForgeResult res;
  struct Local {
    long m;
    WeierstrassCurve E;
    bool mult;
    long exponent;
  };
  std::vector<Local> locals;
  std::vector<long> used;
  for (auto& t : spec.P) {
    locals.push_back({t.p, deuring_search(t.p, t.ap, seed), false, 1});
    used.push_back(t.p);
  }
  for (auto& t : spec.L) {
    locals.push_back({t.ell, tate_local_model(t.ell, t.a, t.c), true, t.c + 1});
    used.push_back(t.ell);
  }
  for (long q : spec.Q) {
    auto w = irreducibility_witness(q, used);
    used.push_back(w.r);
    res.witnesses.push_back(w);
    locals.push_back({w.r, w.curve, false, 1});
  }
  std::mt19937_64 rng(seed);
  for (;;) {
    Integer M = 1;
    std::array<Integer, 5> a{0, 0, 0, 0, 0};
    for (auto& loc : locals) {
      Integer mk = ipow(loc.m, loc.exponent);
      auto la = loc.E.ainvs();
      for (int i = 0; i < 5; ++i) {
        // a = a_i mod M, a = la_i mod mk
        Integer k = mod(Integer((la[i] - a[i]) * inv_mod(M, mk)), mk);
        a[i] += M * k;
      }
      M *= mk;
    }
    std::optional<WeierstrassCurve> E;
    for (int tries = 0; tries < 100 && !E; ++tries) {
      std::array<Integer, 5> b = a;
      for (auto& x : b) x += M * static_cast<long>(rng() % 3);
      try {
        E = curve_invariants(b);
      } catch (const DomainError&) {
      }
    }
    if (!E) throw Error("could not find a nonsingular lift");
    res.curve = *E;
    res.exponents.clear();
    for (auto& loc : locals) res.exponents[loc.m] = loc.exponent;
    res.ledger = forge_verify(res.curve, spec, res.witnesses);
    if (res.verified()) return res;
    bool grown = false;
    for (auto& loc : locals)
      if (loc.mult && loc.exponent < kMaxExponent) {
        loc.exponent = std::min(kMaxExponent, loc.exponent * 2);
        grown = true;
      }
    if (!grown) throw BoundError("forge verification did not converge by t = " + std::to_string(kMaxExponent));
  }
}

}  // namespace iwasawa::forge
