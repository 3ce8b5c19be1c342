#include "iwasawa/lambda.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace iwasawa::lambda {

namespace {

Integer pw(long p, long n) { return ipow(p, n); }

Integer centered_residue(const Integer& x, const Integer& m) {
  Integer r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

long val_or(const Integer& x, long p, long cap) {
  if (x == 0) return cap;
  return std::min(val(x, p), cap);
}

}  // namespace

LambdaElement::LambdaElement(long p, long N, long K, std::vector<Integer> coeffs)
    : p_(p), N_(N), K_(K) {
  if (p < 2 || !is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (N < 1 || K < 1) throw DomainError("precision must be positive");
  Integer m = pw(p, N);
  c_.assign(K, Integer(0));
  for (size_t i = 0; i < coeffs.size() && static_cast<long>(i) < K; ++i) c_[i] = mod(coeffs[i], m);
}

LambdaElement LambdaElement::constant(long p, long N, long K, const Integer& c) {
  return LambdaElement(p, N, K, {c});
}

LambdaElement LambdaElement::t(long p, long N, long K) {
  return LambdaElement(p, N, K, {0, 1});
}

LambdaElement LambdaElement::parse(const std::string& text, long default_N, long default_K) {
  auto field = [&](const std::string& key) -> std::optional<std::string> {
    size_t pos = 0;
    while ((pos = text.find(key + "=", pos)) != std::string::npos) {
      if (pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1]))) break;
      ++pos;
    }
    if (pos == std::string::npos) return std::nullopt;
    size_t start = pos + key.size() + 1;
    if (key == "coeffs") {
      size_t close = text.find(']', start);
      if (text[start] != '[' || close == std::string::npos) throw DomainError("coeffs must be a [..] list");
      return text.substr(start + 1, close - start - 1);
    }
    size_t end = text.find_first_of(" \t", start);
    return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
  };
  auto p = field("p");
  auto cs = field("coeffs");
  if (!p || !cs) throw DomainError("lambda element needs p= and coeffs=: " + text);
  long N = default_N, K = default_K;
  if (auto n = field("N")) N = std::stol(*n);
  if (auto k = field("K")) K = std::stol(*k);
  std::vector<Integer> coeffs;
  std::stringstream ss(*cs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    Rational q = parse_rational(item);
    if (q.get_den() != 1) throw DomainError("coefficients must be integers");
    coeffs.push_back(q.get_num());
  }
  if (static_cast<long>(coeffs.size()) > K) throw DomainError("more coefficients than T-precision K");
  return LambdaElement(std::stol(*p), N, K, coeffs);
}

std::vector<Integer> LambdaElement::centered() const {
  Integer m = pw(p_, N_);
  std::vector<Integer> out;
  for (auto& c : c_) out.push_back(centered_residue(c, m));
  return out;
}

long LambdaElement::degree_bound() const {
  long d = K_;
  while (d > 0 && c_[d - 1] == 0) --d;
  return d;
}

bool LambdaElement::is_zero() const { return degree_bound() == 0; }

LambdaElement LambdaElement::with_precision(long N, long K) const {
  return LambdaElement(p_, std::min(N, N_), std::min(K, K_), c_);
}

LambdaElement LambdaElement::operator-() const {
  std::vector<Integer> c;
  for (auto& x : c_) c.push_back(-x);
  return LambdaElement(p_, N_, K_, c);
}

static void same_prime(const LambdaElement& a, const LambdaElement& b) {
  if (a.prime() != b.prime()) throw DomainError("Lambda prime mismatch");
}

LambdaElement operator+(const LambdaElement& a, const LambdaElement& b) {
  same_prime(a, b);
  long K = std::min(a.K_, b.K_);
  std::vector<Integer> c(K);
  for (long i = 0; i < K; ++i) c[i] = a.c_[i] + b.c_[i];
  return LambdaElement(a.p_, std::min(a.N_, b.N_), K, c);
}

LambdaElement operator-(const LambdaElement& a, const LambdaElement& b) { return a + (-b); }

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  same_prime(a, b);
  long K = std::min(a.K_, b.K_);
  long N = std::min(a.N_, b.N_);
  Integer m = pw(a.p_, N);
  std::vector<Integer> c(K, Integer(0));
  for (long i = 0; i < K; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; i + j < K; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  for (auto& x : c) x = mod(x, m);
  return LambdaElement(a.p_, N, K, c);
}

LambdaElement operator*(const Integer& s, const LambdaElement& a) {
  std::vector<Integer> c;
  for (auto& x : a.c_) c.push_back(s * x);
  return LambdaElement(a.p_, a.N_, a.K_, c);
}

bool operator==(const LambdaElement& a, const LambdaElement& b) {
  if (a.p_ != b.p_) return false;
  return (a - b).is_zero();
}

LambdaElement LambdaElement::inverse() const {
  Integer m = pw(p_, N_);
  if (mod(c_[0], p_) == 0) throw DomainError("power series with non-unit constant term is not invertible");
  Integer inv0 = inv_mod(c_[0], m);
  std::vector<Integer> r(K_, Integer(0));
  r[0] = inv0;
  for (long n = 1; n < K_; ++n) {
    Integer s = 0;
    for (long i = 1; i <= n; ++i) s += c_[i] * r[n - i];
    r[n] = mod(Integer(-s * inv0), m);
  }
  return LambdaElement(p_, N_, K_, r);
}

std::string LambdaElement::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << " N=" << N_ << " K=" << K_ << " coeffs=[";
  auto c = centered();
  long d = std::max(1L, degree_bound());
  for (long i = 0; i < d; ++i) os << (i ? "," : "") << c[i].get_str();
  os << "]";
  return os.str();
}

std::vector<Integer> DistinguishedPoly::centered() const {
  Integer m = pw(p, precision);
  std::vector<Integer> out;
  for (auto& c : coeffs) out.push_back(centered_residue(c, m));
  out.back() = 1;
  return out;
}

std::string DistinguishedPoly::to_string() const {
  std::ostringstream os;
  auto c = centered();
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Integer a = abs(c[i]);
    os << (first ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + "));
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << "T";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

MuLambda mu_lambda(const LambdaElement& f) {
  long p = f.prime();
  long mu = f.N();
  for (long i = 0; i < f.K(); ++i) mu = std::min(mu, val_or(f[i], p, f.N()));
  if (mu >= f.N()) throw PrecisionError("power series indistinguishable from zero");
  for (long i = 0; i < f.K(); ++i)
    if (val_or(f[i], p, f.N()) == mu) return {mu, i};
  return {mu, 0};
}

Prepared weierstrass_prepare(const LambdaElement& f) {
  long p = f.prime(), K = f.K();
  auto [mu, d] = mu_lambda(f);
  if (d >= K) throw PrecisionError("lambda exceeds T-precision");
  long Ng = f.N() - mu;
  Integer m = pw(p, Ng);
  Integer pmu = pw(p, mu);
  std::vector<Integer> g(K);
  for (long i = 0; i < K; ++i) g[i] = mod(Integer(f[i] / pmu), m);

  Prepared out{mu, DistinguishedPoly{p, {}, Ng}, LambdaElement(p, Ng, K), std::vector<long>(K, Ng)};
  if (d == 0) {
    out.d.coeffs = {1};
    out.u = LambdaElement(p, Ng, K, g);
    return out;
  }

  std::vector<Integer> P(d, Integer(0)), U(K, Integer(0));
  auto solve_u = [&] {
    for (long j = K - d; j < K; ++j) U[j] = 0;  // unconstrained by f mod T^K
    for (long j = K - d - 1; j >= 0; --j) {
      Integer s = g[j + d];
      for (long i = 0; i < d; ++i) s -= P[i] * U[j + d - i];
      U[j] = mod(s, m);
    }
  };
  bool converged = false;
  for (long it = 0; it < Ng + 4; ++it) {
    solve_u();
    Integer inv0 = inv_mod(U[0], m);
    std::vector<Integer> Q(d);
    for (long n = 0; n < d; ++n) {
      Integer s = g[n];
      for (long i = 0; i < n; ++i) s -= Q[i] * U[n - i];
      Q[n] = mod(Integer(s * inv0), m);
    }
    if (Q == P) {
      converged = true;
      break;
    }
    P = Q;
  }
  if (!converged) throw PrecisionError("Weierstrass preparation did not converge");

  // First-order error propagation from the free tail coefficients of u.
  std::vector<long> vP(d), eP(d, Ng), eU(K, Ng);
  for (long i = 0; i < d; ++i) vP[i] = val_or(P[i], p, Ng);
  for (long j = K - d; j < K; ++j) eU[j] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (long j = K - d - 1; j >= 0; --j) {
      long e = eU[j];
      for (long i = 0; i < d; ++i) e = std::min({e, eP[i], vP[i] + eU[j + d - i]});
      if (e < eU[j]) eU[j] = e, changed = true;
    }
    for (long n = 0; n < d; ++n) {
      long e = eP[n];
      for (long i = 0; i < n; ++i) e = std::min(e, eP[i]);
      for (long i = 0; i <= n; ++i) e = std::min(e, vP[i] + eU[n - i]);
      if (e < eP[n]) eP[n] = e, changed = true;
    }
  }
  long Nd = std::min(Ng, *std::min_element(eP.begin(), eP.end()));

  std::vector<Integer> pc(P.begin(), P.end());
  pc.push_back(1);
  out.d.coeffs.clear();
  for (auto& c : pc) out.d.coeffs.push_back(mod(c, pw(p, Nd)));
  out.d.precision = Nd;
  out.u = LambdaElement(p, Ng, K, U);
  out.u_precision = eU;

  // reconstruction: d*u == g mod (p^Ng, T^K)
  LambdaElement dd(p, Ng, K, pc);
  if (!(dd * out.u == LambdaElement(p, Ng, K, g)))
    throw PrecisionError("Weierstrass reconstruction check failed");
  return out;
}

static std::vector<Integer> theta_full(long n, long p) {
  unsigned long m = ipow(p, n).get_ui();
  std::vector<Integer> c(m + 1);
  for (unsigned long i = 1; i <= m; ++i) c[i] = binomial(m, i);
  c[0] = 0;
  return c;
}

Theta theta(long n, long p, long N, long K) {
  if (n < 0) throw DomainError("theta index must be nonnegative");
  Integer m = pw(p, n);
  bool truncated = m >= K;
  std::vector<Integer> c(K, Integer(0));
  if (m.fits_ulong_p()) {
    unsigned long mm = m.get_ui();
    for (long i = 1; i < K && static_cast<unsigned long>(i) <= mm; ++i) c[i] = binomial(mm, i);
  } else {
    throw BoundError("p^n too large");
  }
  return {LambdaElement(p, N, K, c), truncated};
}

long max_pn() {
  if (const char* s = std::getenv("IWASAWA_MAX_PN")) {
    long v = std::atol(s);
    if (v > 0) return v;
  }
  return 128;
}

std::vector<std::optional<long>> local_elementary_divisors(std::vector<std::vector<Integer>> a, long p, long N) {
  Integer m = pw(p, N);
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& r : a)
    for (auto& x : r) x = mod(x, m);
  std::vector<std::optional<long>> out;
  size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    long best = N;
    size_t bi = 0, bj = 0;
    for (size_t i = k; i < rows && best > 0; ++i)
      for (size_t j = k; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        long v = val(a[i][j], p);
        if (v < best) {
          best = v, bi = i, bj = j;
          if (v == 0) break;
        }
      }
    if (best >= N) break;
    std::swap(a[k], a[bi]);
    for (auto& r : a) std::swap(r[k], r[bj]);
    Integer pv = pw(p, best);
    Integer uinv = inv_mod(Integer(a[k][k] / pv), m);
    for (size_t i = k + 1; i < rows; ++i) {
      if (a[i][k] == 0) continue;
      Integer factor = mod(Integer((a[i][k] / pv) * uinv), m);
      for (size_t j = k; j < cols; ++j) a[i][j] = mod(Integer(a[i][j] - factor * a[k][j]), m);
    }
    // column operations only touch row k, which no longer matters
    out.push_back(best);
  }
  for (; k < std::min(rows, cols); ++k) out.push_back(std::nullopt);
  return out;
}

QuotientOrder quotient_order(const LambdaElement& f, long n) {
  long p = f.prime(), N = f.N();
  if (f.is_zero()) throw DomainError("quotient by zero");
  Integer big_m = pw(p, n);
  if (big_m > max_pn()) throw BoundError("p^n = " + big_m.get_str() + " exceeds the configured bound " + std::to_string(max_pn()));
  long m = big_m.get_si();
  Integer mod_n = pw(p, N);
  auto th = theta_full(n, p);

  // r = f mod theta_n, then columns T^j r mod theta_n
  auto reduce_poly = [&](std::vector<Integer> a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= m; --i) {
      Integer c = a[i];
      if (c == 0) continue;
      for (long j = 0; j <= m; ++j) a[i - m + j] -= c * th[j];
      a[i] = 0;
    }
    a.resize(m, Integer(0));
    for (auto& x : a) x = mod(x, mod_n);
    return a;
  };
  std::vector<Integer> r = reduce_poly(f.coeffs());
  std::vector<std::vector<Integer>> mat(m, std::vector<Integer>(m));
  std::vector<Integer> col = r;
  for (long j = 0; j < m; ++j) {
    for (long i = 0; i < m; ++i) mat[i][j] = col[i];
    col.insert(col.begin(), Integer(0));
    col = reduce_poly(col);
  }
  auto divs = local_elementary_divisors(mat, p, N);
  QuotientOrder q{0, 0, big_m >= f.K()};
  for (auto& d : divs) {
    if (d)
      q.e_n += *d;
    else
      ++q.free_rank;
  }
  if (q.free_rank == 0 && m * f.degree_bound() <= 256) {
    auto rv = resultant_valuation(f, n);
    if (!rv || *rv != q.e_n) throw Error("Smith form and resultant valuations disagree");
  }
  return q;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
  long db = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b.back();
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(std::min<long>(a.size(), db));
  trim(a);
  return a;
}

Rational resultant(QPoly a, QPoly b) {
  Rational acc = 1;
  for (;;) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    if (db == 0) return acc * qpow(b[0], da);
    QPoly r = poly_mod(a, b);
    if (r.empty()) return 0;
    long dr = static_cast<long>(r.size()) - 1;
    if ((da * db) % 2) acc = -acc;
    acc *= qpow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

std::optional<long> resultant_valuation(const LambdaElement& f, long n) {
  QPoly a, b;
  for (auto& c : f.centered()) a.push_back(Rational(c));
  trim(a);
  for (auto& c : theta_full(n, f.prime())) b.push_back(Rational(c));
  if (a.empty()) return std::nullopt;
  Rational r = resultant(a, b);
  if (r == 0) return std::nullopt;
  return val(r, f.prime());
}

GrowthParams growth_fit(const LambdaElement& f, long n_max) {
  if (n_max < 2) throw DomainError("growth_fit needs n_max >= 2");
  long p = f.prime();
  auto ml = mu_lambda(f);
  GrowthParams g{};
  for (long n = 0; n <= n_max; ++n) g.data.push_back(quotient_order(f, n));
  g.lambda0 = g.data.back().free_rank;
  g.lambda = ml.lambda - g.lambda0;
  g.mu = ml.mu;
  auto nu_at = [&](long n) -> Integer { return Integer(g.data[n].e_n - g.lambda * n) - g.mu * pw(p, n); };
  Integer nu = nu_at(n_max);
  long n0 = n_max;
  while (n0 > 0 && g.data[n0 - 1].free_rank == g.lambda0 && nu_at(n0 - 1) == nu) --n0;
  std::ostringstream partial;
  for (long n = 0; n <= n_max; ++n) partial << " n=" << n << ":(" << g.data[n].free_rank << "," << g.data[n].e_n << ")";
  if (n0 >= n_max) throw PrecisionError("growth tail does not stabilise within n_max;" + partial.str());
  g.n0 = n0;
  g.nu = nu.get_si();
  // independent exact fit through the last three points
  if (n_max - n0 >= 2) {
    long a = n_max - 2;
    Rational A[3][4];
    for (int i = 0; i < 3; ++i) {
      long n = a + i;
      A[i][0] = n;
      A[i][1] = Rational(pw(p, n));
      A[i][2] = 1;
      A[i][3] = g.data[n].e_n;
    }
    for (int c = 0; c < 3; ++c) {
      int piv = c;
      while (A[piv][c] == 0) ++piv;
      std::swap(A[piv], A[c]);
      for (int i = 0; i < 3; ++i) {
        if (i == c || A[i][c] == 0) continue;
        Rational t = A[i][c] / A[c][c];
        for (int j = c; j < 4; ++j) A[i][j] -= t * A[c][j];
      }
    }
    Rational lam = A[0][3] / A[0][0], mu = A[1][3] / A[1][1], nuf = A[2][3] / A[2][2];
    if (lam != g.lambda || mu != g.mu || nuf != g.nu)
      throw Error("growth fit disagrees with lambda(f) - lambda0 and mu(f);" + partial.str());
  }
  return g;
}

LambdaElement involution(const LambdaElement& f) {
  long p = f.prime(), N = f.N(), K = f.K();
  if (K < 2) throw DomainError("involution needs K >= 2");
  std::vector<Integer> s(K);
  for (long k = 1; k < K; ++k) s[k] = (k % 2) ? -1 : 1;
  LambdaElement sub(p, N, K, s);
  LambdaElement r = LambdaElement::constant(p, N, K, f[K - 1]);
  for (long i = K - 2; i >= 0; --i) r = r * sub + LambdaElement::constant(p, N, K, f[i]);
  return r;
}

Verdict associates_check(const LambdaElement& f, const LambdaElement& g, long min_digits) {
  if (f.prime() != g.prime()) throw DomainError("Lambda prime mismatch");
  auto a = weierstrass_prepare(f);
  auto b = weierstrass_prepare(g);
  if (a.mu != b.mu || a.d.degree() != b.d.degree()) return Verdict::no;
  long prec = std::min(a.d.precision, b.d.precision);
  Integer m = pw(f.prime(), prec);
  for (long i = 0; i <= a.d.degree(); ++i)
    if (mod(Integer(a.d.coeffs[i] - b.d.coeffs[i]), m) != 0) return Verdict::no;
  return prec >= min_digits ? Verdict::yes : Verdict::indeterminate;
}

long mod_p_shape(const LambdaElement& f) {
  auto ml = mu_lambda(f);
  if (ml.mu > 0) throw DomainError("mod p shape needs mu = 0");
  // reduction mod p is c_lambda T^lambda (1 + ...), with c_lambda a unit
  for (long i = 0; i < ml.lambda; ++i)
    if (mod(f[i], f.prime()) != 0) throw Error("mod p reduction is not a unit times T^lambda");
  return ml.lambda;
}

PadicNumber default_kappa(long p, long N) {
  return PadicNumber(p, Rational(p == 2 ? 5 : 1 + p), N);
}

PadicNumber evaluate_Lp(const LambdaElement& f, const PadicNumber& s, const PadicNumber& kappa) {
  long p = f.prime();
  if (kappa.prime() != p || s.prime() != p) throw DomainError("prime mismatch");
  long q = p == 2 ? 2 : 1;
  PadicNumber one(p, 1, std::max(1L, kappa.absolute_precision()));
  PadicNumber disp = kappa - one;
  if (disp.is_zero() || disp.valuation().value() != q)
    throw DomainError("kappa must be a topological generator of the principal units");
  if (!s.is_integral()) throw DomainError("s must lie in Z_p");
  PadicNumber s_one(p, 1, std::max(1L, s.absolute_precision()));
  PadicNumber x = (s - s_one) * padic::iwasawa_log(kappa);
  PadicNumber t = x.is_zero() ? PadicNumber::zero(p, x.absolute_precision()) : padic::detail::exp(x) - one;
  long vt = t.is_zero() ? t.absolute_precision() : t.valuation().value();
  PadicNumber acc = PadicNumber::zero(p, f.N());
  for (long i = f.K() - 1; i >= 0; --i) {
    PadicNumber c = PadicNumber::from_residue(p, Rational(f[i]), f.N());
    acc = acc * t + c;
  }
  // terms beyond T^K are only known to vanish to order K * v(t)
  return acc + PadicNumber::zero(p, f.K() * vt);
}

FeSolution fe_solve(const LambdaElement& f) {
  long p = f.prime(), K = f.K();
  LambdaElement g = involution(f);
  auto a = weierstrass_prepare(f);
  auto b = weierstrass_prepare(g);
  if (a.mu != b.mu || a.d.degree() != b.d.degree()) return {Verdict::no, 1, std::nullopt};
  long prec = std::min(a.d.precision, b.d.precision);
  Integer pm = pw(p, prec);
  for (long i = 0; i <= a.d.degree(); ++i)
    if (mod(Integer(a.d.coeffs[i] - b.d.coeffs[i]), pm) != 0) return {Verdict::no, 1, std::nullopt};

  long Nr = std::min(a.u.N(), b.u.N());
  LambdaElement R = b.u.with_precision(Nr, K) * a.u.with_precision(Nr, K).inverse();
  std::vector<long> eR(K);
  long run = Nr;
  for (long k = 0; k < K; ++k) {
    run = std::min({run, a.u_precision[k], b.u_precision[k]});
    eR[k] = run;
  }
  if (eR[1] < 1) return {Verdict::indeterminate, 1, std::nullopt};
  Integer m0 = pw(p, eR[0]);
  int w;
  if (mod(Integer(R[0] - 1), m0) == 0)
    w = 1;
  else if (mod(Integer(R[0] + 1), m0) == 0)
    w = -1;
  else
    return {Verdict::no, 1, std::nullopt};
  PadicNumber c = PadicNumber::from_residue(p, Rational(Integer(w) * R[1]), eR[1]);
  // compare R with w (1+T)^c coefficientwise
  PadicNumber binom = c;
  bool checked_any = false;
  for (long k = 2; k < K; ++k) {
    PadicNumber ck = c - PadicNumber(p, Rational(k - 1), eR[1] + 10);
    binom = binom * ck / PadicNumber(p, Rational(k), eR[1] + 10);
    long avail = std::min(eR[k], binom.absolute_precision());
    if (avail < 1) break;
    PadicNumber rk = PadicNumber::from_residue(p, Rational(R[k]), eR[k]);
    PadicNumber diff = rk - PadicNumber(p, Rational(w), avail) * binom;
    if (!diff.is_zero()) return {Verdict::no, 1, std::nullopt};
    checked_any = true;
  }
  if (!checked_any && K > 2) return {Verdict::indeterminate, w, c};
  return {Verdict::yes, w, c};
}

LambdaElement char_ideal(const LambdaModulePresentation& X) {
  size_t r = X.rows.size();
  if (r == 0) throw DomainError("empty presentation");
  for (auto& row : X.rows)
    if (row.size() != r) throw DomainError("presentation must be square");
  std::function<LambdaElement(std::vector<size_t>, size_t)> det = [&](std::vector<size_t> cols, size_t row) {
    if (cols.size() == 1) return X.rows[row][cols[0]];
    const LambdaElement& ref = X.rows[row][cols[0]];
    LambdaElement acc = LambdaElement(ref.prime(), ref.N(), ref.K());
    for (size_t i = 0; i < cols.size(); ++i) {
      std::vector<size_t> rest = cols;
      rest.erase(rest.begin() + i);
      LambdaElement term = X.rows[row][cols[i]] * det(rest, row + 1);
      acc = (i % 2) ? acc - term : acc + term;
    }
    return acc;
  };
  std::vector<size_t> cols(r);
  for (size_t i = 0; i < r; ++i) cols[i] = i;
  LambdaElement d = det(cols, 0);
  if (d.is_zero()) throw PrecisionError("determinant vanishes at working precision: module not torsion");
  return d;
}

long min_generators(const LambdaModulePresentation& X) {
  size_t r = X.rows.size();
  if (r == 0) return 0;
  long p = X.rows[0][0].prime();
  std::vector<std::vector<long>> a(r, std::vector<long>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) a[i][j] = mod(X.rows[i][j][0], p);
  long rank = 0;
  for (size_t c = 0; c < r; ++c) {
    size_t piv = rank;
    while (piv < r && a[piv][c] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    long inv = inv_mod(Integer(a[rank][c]), p).get_si();
    for (size_t i = 0; i < r; ++i) {
      if (i == static_cast<size_t>(rank) || a[i][c] == 0) continue;
      long t = a[i][c] * inv % p;
      for (size_t j = 0; j < r; ++j) a[i][j] = ((a[i][j] - t * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<long>(r) - rank;
}

}  // namespace iwasawa::lambda
