#include "iwasawa/mu.hpp"

#include <functional>
#include <set>

#include "iwasawa/local.hpp"
#include "iwasawa/torsion.hpp"

namespace iwasawa::mu {

using namespace ec;

const char* to_string(Provenance p) { return p == Provenance::computed ? "computed" : "input"; }

namespace {

bool is_two_torsion(const AInvs& a, const RationalPoint& P) {
  if (P.infinity || !on_curve(a, P)) return false;
  return 2 * P.y + a[0] * P.x + a[2] == 0;
}

}  // namespace

TwoTorsionClass classify_two_torsion(const WeierstrassCurve& E, const RationalPoint& P) {
  AInvs a = E.rational_ainvs();
  if (!is_two_torsion(a, P)) throw DomainError("point is not of order 2");
  auto ld = tate_local(E, 2);
  if (ld.kind == Reduction::additive) throw DomainError("additive reduction at 2");
  if (ld.kind == Reduction::good && ld.supersingular) throw DomainError("supersingular at 2");
  TwoTorsionClass c{};
  c.ramified = val(ld.change.map_point(P).x, 2) < 0;
  if (E.disc < 0) {
    c.odd = true;
  } else {
    // 4x^3 + b2 x^2 + 2 b4 x + b6 = (x - x0)(4x^2 + B x + C)
    Rational x0 = P.x;
    Rational B = Rational(E.b2) + 4 * x0, C = Rational(2 * E.b4) + B * x0;
    Rational q0 = (4 * x0 + B) * x0 + C;
    c.odd = q0 > 0 && x0 < -B / 8;
  }
  return c;
}

RationalPoint TwoIsogeny::operator()(const RationalPoint& Q) const {
  if (Q.infinity || Q == kernel) return RationalPoint::at_infinity();
  Rational dx = Q.x - kernel.x;
  Rational X = Q.x + t / dx;
  Rational Y = Q.y - t * (source[0] * dx + Q.y - kernel.y) / (dx * dx);
  return RationalPoint::affine(X, Y);
}

TwoIsogeny velu_2isogeny(const AInvs& a, const RationalPoint& P) {
  if (!is_two_torsion(a, P)) throw DomainError("isogeny kernel must be a point of order 2");
  auto I = invariants(a);
  TwoIsogeny f;
  f.source = a;
  f.kernel = P;
  f.t = 3 * P.x * P.x + 2 * a[1] * P.x + a[3] - a[0] * P.y;
  Rational w = P.x * f.t;
  f.target = {a[0], a[1], a[2], a[3] - 5 * f.t, a[4] - I.b2 * f.t - 7 * w};
  return f;
}

RationalPoint DualPair::compose(const RationalPoint& Q) const { return to_source.map_point(dual(phi(Q))); }

namespace {

std::vector<RationalPoint> rational_two_torsion(const AInvs& a) {
  auto [E, ch] = integral_model(a);
  std::vector<RationalPoint> out;
  for (auto& P : two_torsion_points(E)) out.push_back(ch.pull_back(P));
  return out;
}

ModelChange negation(const AInvs& a) { return {-1, 0, -a[0], -a[2]}; }

}  // namespace

DualPair dual_isogeny(const TwoIsogeny& phi) {
  std::vector<RationalPoint> probes;
  {
    auto [E, ch] = integral_model(phi.source);
    for (auto& P : torsion(E).points) {
      auto Q = ch.pull_back(P);
      if (!Q.infinity && !is_two_torsion(phi.source, Q)) probes.push_back(Q);
    }
  }
  for (auto& K : rational_two_torsion(phi.target)) {
    auto psi = velu_2isogeny(phi.target, K);
    auto iso = find_isomorphism(psi.target, phi.source);
    if (!iso) continue;
    for (auto c : {*iso, iso->then(negation(phi.source))}) {
      // both isogenies preserve the invariant differential and [2] scales it by 2
      if (c.u != 2) continue;
      DualPair d{phi, psi, c};
      bool ok = true;
      for (auto& Q : probes) ok = ok && d.compose(Q) == multiply(phi.source, Q, 2);
      if (ok) return d;
    }
  }
  throw Error("dual isogeny not found");
}

IsogenyClass two_isogeny_class(const WeierstrassCurve& E, const std::string& prefix, size_t max_curves) {
  IsogenyClass C;
  auto index_of = [&](const WeierstrassCurve& F) -> std::optional<size_t> {
    for (size_t i = 0; i < C.curves.size(); ++i)
      if (C.curves[i].j == F.j && find_isomorphism(C.curves[i].rational_ainvs(), F.rational_ainvs())) return i;
    return std::nullopt;
  };
  C.curves.push_back(minimal_model(E).first);
  C.names.push_back(prefix + "1");
  for (size_t i = 0; i < C.curves.size(); ++i) {
    const WeierstrassCurve F = C.curves[i];
    for (auto& P : two_torsion_points(F)) {
      auto phi = velu_2isogeny(F.rational_ainvs(), P);
      auto target = minimal_model(integral_model(phi.target).first).first;
      auto k = index_of(target);
      if (!k) {
        if (C.curves.size() >= max_curves) throw BoundError("isogeny class larger than the curve cap");
        C.curves.push_back(target);
        C.names.push_back(prefix + std::to_string(C.curves.size()));
        k = C.curves.size() - 1;
      }
      IsogenyEdge e{C.names[i], C.names[*k], 2, {}};
      e.kernel.p = 2;
      e.kernel.m = 1;
      e.kernel.provenance = Provenance::computed;
      e.kernel.note = "<" + P.to_string() + ">";
      try {
        auto cl = classify_two_torsion(F, P);
        e.kernel.ramified = cl.ramified;
        e.kernel.odd = cl.odd;
      } catch (const DomainError& ex) {
        C.notes.push_back(C.names[i] + ": " + ex.what());
        continue;
      }
      C.edges.push_back(e);
    }
  }
  return C;
}

MuVerdict mu_lower_bound(const std::string& curve, long p, const std::vector<IsogenyEdge>& edges) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  std::map<std::pair<std::string, std::string>, const IsogenyEdge*> seen;
  std::map<std::string, std::vector<const IsogenyEdge*>> out;
  for (auto& e : edges) {
    if (e.kernel.p != p) continue;
    if (e.kernel.m < 1 || ipow(p, e.kernel.m) != e.degree) throw DomainError("edge degree must equal the kernel order");
    if (p == 2 && e.kernel.provenance == Provenance::computed && e.kernel.m != 1)
      throw DomainError("computed classifications exist only for order-2 kernels");
    auto key = std::make_pair(e.from, e.to);
    auto it = seen.find(key);
    if (it != seen.end() && it->second->degree == e.degree &&
        (it->second->kernel.ramified != e.kernel.ramified || it->second->kernel.odd != e.kernel.odd))
      throw DomainError("contradictory classifications for " + e.from + " -> " + e.to);
    seen[key] = &e;
    if (e.kernel.ramified && e.kernel.odd) out[e.from].push_back(&e);
  }
  std::map<std::string, std::pair<long, std::vector<std::string>>> memo;
  std::set<std::string> active;
  std::function<std::pair<long, std::vector<std::string>>(const std::string&)> best = [&](const std::string& v) {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    if (active.count(v)) throw DomainError("cycle of ramified odd kernels through " + v);
    active.insert(v);
    std::pair<long, std::vector<std::string>> r{0, {v}};
    for (auto* e : out[v]) {
      auto sub = best(e->to);
      if (sub.first + e->kernel.m > r.first) {
        r.first = sub.first + e->kernel.m;
        r.second = {v};
        r.second.insert(r.second.end(), sub.second.begin(), sub.second.end());
      }
    }
    active.erase(v);
    memo[v] = r;
    return r;
  };
  auto [m, chain] = best(curve);
  MuVerdict v;
  v.lower_bound = m;
  v.chain = chain;
  v.rule = m > 0 ? "ramified odd subgroup of order p^" + std::to_string(m) : "no ramified odd subgroup";
  return v;
}

MuVerdict mu_zero_certificate(long p, const KernelClass& k) {
  if (k.p != p || k.m != 1) throw DomainError("certificate needs a kernel of order p");
  MuVerdict v;
  v.zero_certified = k.ramified != k.odd;
  v.rule = v.zero_certified ? (k.ramified ? "ramified and even kernel" : "unramified and odd kernel")
                            : (k.ramified ? "kernel is ramified and odd" : "kernel is unramified and even");
  return v;
}

KramerCurve kramer_m1(const Integer& a, const Integer& b) {
  Integer e = 4 * a - 1;
  if (gcd(e, b) != 1) throw DomainError("need gcd(4a - 1, b) = 1");
  if (e * e <= 64 * b) throw DomainError("need (4a - 1)^2 > 64 b");
  if (a >= 0 && b >= 0) throw DomainError("need a or b negative");
  KramerCurve k{curve_invariants(1, Integer(-a), 0, Integer(-4 * b), Integer(e * b)),
                RationalPoint::affine(Rational(e) / 4, Rational(-e) / 8)};
  if (!is_two_torsion(k.E.rational_ainvs(), k.P)) throw Error("Kramer generator is not 2-torsion");
  Integer f = e * e - 64 * b;
  if (k.E.disc != b * f * f) throw Error("Kramer discriminant mismatch");
  return k;
}

Integer kramer_m4_discriminant(const Integer& c, const Integer& d) {
  Integer c4 = ipow(c, 4), d4 = ipow(d, 4);
  return (c4 - d4) * c4 * ipow(d, 16) / 16;
}

KramerCurve kramer_m4(const Integer& c, const Integer& d) {
  if (c <= 0 || d <= 0 || c == d) throw DomainError("need distinct positive c, d");
  if (c % 2 == 0 || d % 2 == 0) throw DomainError("need c, d odd");
  if (mod(Integer(c - d), 4) != 0) throw DomainError("need c = d mod 4");
  if (gcd(c, d) != 1) throw DomainError("need gcd(c, d) = 1");
  Integer c4 = ipow(c, 4), d4 = ipow(d, 4);
  Integer A = 2 * c4 - d4, B = 4 * c4 * d4 - 4 * c4 * c4;
  KramerCurve k{curve_invariants(0, A, 0, B, Integer(A * B)), RationalPoint::affine(Rational(Integer(d4 - 2 * c4)), 0)};
  if (!is_two_torsion(k.E.rational_ainvs(), k.P)) throw Error("Kramer point is not 2-torsion");
  return k;
}

}  // namespace iwasawa::mu
