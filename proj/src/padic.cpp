#include "iwasawa/padic.hpp"

#include <ostream>

namespace iwasawa::padic {

long Valuation::value() const {
  if (inf_) throw DomainError("infinite valuation has no value");
  return v_;
}

Valuation operator+(Valuation a, Valuation b) {
  if (a.inf_ || b.inf_) return Valuation::infinity();
  return Valuation(a.v_ + b.v_);
}

bool operator==(Valuation a, Valuation b) {
  return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
}

bool operator<(Valuation a, Valuation b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.v_ < b.v_;
}

std::ostream& operator<<(std::ostream& os, Valuation v) {
  if (v.inf_) return os << "inf";
  return os << v.v_;
}

static void check_prime(long p) {
  if (p < 2 || !is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
}

PadicNumber PadicNumber::make(long p, long v, long n, Integer u) {
  PadicNumber r;
  r.p_ = p;
  r.v_ = v;
  r.n_ = n;
  r.u_ = std::move(u);
  r.zero_ = false;
  return r;
}

PadicNumber::PadicNumber(long p, const Rational& x, long digits) : p_(p) {
  check_prime(p);
  if (digits < 1) throw PrecisionError("precision must be at least one digit");
  if (x == 0) {
    zero_ = true;
    v_ = digits;
    n_ = 0;
    return;
  }
  v_ = val(x, p);
  n_ = digits;
  Rational unit = x * qpow(Rational(p), -v_);
  u_ = reduce(unit, ipow(p, digits));
}

PadicNumber PadicNumber::zero(long p, long absolute_precision) {
  check_prime(p);
  PadicNumber r;
  r.p_ = p;
  r.zero_ = true;
  r.v_ = absolute_precision;
  r.n_ = 0;
  return r;
}

PadicNumber PadicNumber::from_residue(long p, const Rational& x, long absolute_precision) {
  if (x == 0 || val(x, p) >= absolute_precision) return zero(p, absolute_precision);
  return PadicNumber(p, x, absolute_precision - val(x, p));
}

Valuation PadicNumber::valuation() const {
  if (zero_) return Valuation::infinity();
  return Valuation(v_);
}

Rational PadicNumber::lift() const {
  if (zero_) return 0;
  return Rational(u_) * qpow(Rational(p_), v_);
}

Rational PadicNumber::centered_lift() const {
  if (zero_) return 0;
  Integer m = ipow(p_, n_);
  Integer u = u_;
  if (2 * u > m) u -= m;
  return Rational(u) * qpow(Rational(p_), v_);
}

PadicNumber PadicNumber::with_precision(long digits) const {
  if (zero_) return zero(p_, std::min(v_, digits));
  if (digits < 1) throw PrecisionError("precision must be at least one digit");
  long n = std::min(n_, digits);
  return make(p_, v_, n, mod(u_, ipow(p_, n)));
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  Integer m = ipow(p_, n_);
  return make(p_, v_, n_, mod(Integer(-u_), m));
}

static void same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime()) throw DomainError("p-adic prime mismatch");
}

static PadicNumber add_signed(const PadicNumber& x, const PadicNumber& y, int sign) {
  same_prime(x, y);
  long p = x.prime();
  long a = std::min(x.absolute_precision(), y.absolute_precision());
  long m = a;
  if (!x.is_zero()) m = std::min(m, x.valuation().value());
  if (!y.is_zero()) m = std::min(m, y.valuation().value());
  if (m >= a) return PadicNumber::zero(p, a);
  Integer mod_m = ipow(p, a - m);
  Integer s = 0;
  if (!x.is_zero()) s += x.unit() * ipow(p, x.valuation().value() - m);
  if (!y.is_zero()) s += sign * y.unit() * ipow(p, y.valuation().value() - m);
  s = mod(s, mod_m);
  if (s == 0) return PadicNumber::zero(p, a);
  long k = val(s, p);
  long v = m + k;
  Integer u = s / ipow(p, k);
  return PadicNumber(p, Rational(u) * qpow(Rational(p), v), a - v);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) { return add_signed(x, y, 1); }
PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return add_signed(x, y, -1); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  same_prime(x, y);
  long p = x.p_;
  if (x.zero_ || y.zero_) {
    // v_ is the valuation of a nonzero factor and the known precision of a zero
    return PadicNumber::zero(p, x.v_ + y.v_);
  }
  long n = std::min(x.n_, y.n_);
  return PadicNumber::make(p, x.v_ + y.v_, n, mod(Integer(x.u_ * y.u_), ipow(p, n)));
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) {
  same_prime(x, y);
  long p = x.p_;
  if (y.zero_) throw DomainError("division by a p-adic number indistinguishable from zero");
  if (x.zero_) return PadicNumber::zero(p, x.v_ - y.v_);
  long n = std::min(x.n_, y.n_);
  Integer m = ipow(p, n);
  return PadicNumber::make(p, x.v_ - y.v_, n, mod(Integer(x.u_ * inv_mod(y.u_, m)), m));
}

bool PadicNumber::agrees_with(const PadicNumber& y) const {
  PadicNumber d = *this - y;
  return d.is_zero();
}

std::ostream& operator<<(std::ostream& os, const PadicNumber& x) {
  if (x.zero_) return os << "O(" << x.p_ << "^" << x.v_ << ")";
  return os << x.centered_lift().get_str() << " + O(" << x.p_ << "^" << x.absolute_precision() << ")";
}

PadicNumber padic_arith(const PadicNumber& x, const PadicNumber& y, Op op) {
  switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    default: return x / y;
  }
}

Integer teichmuller(const Integer& a, long p, long digits) {
  Integer m = ipow(p, digits);
  Integer x = mod(a, m);
  if (mod(x, p) == 0) throw DomainError("Teichmuller lift of a non-unit");
  if (p == 2) return mod(x, 4) == 1 ? Integer(1) : m - 1;
  for (long i = 0; i <= digits + 1; ++i) {
    Integer y;
    mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    if (y == x) return x;
    x = y;
  }
  throw PrecisionError("Teichmuller iteration failed to converge");
}

UnitDecomposition unit_decompose(const PadicNumber& x) {
  if (!x.is_unit()) throw DomainError("unit_decompose needs a p-adic unit");
  long p = x.prime();
  long n = x.precision();
  Integer w = teichmuller(x.unit(), p, n);
  Integer m = ipow(p, n);
  Integer pr = mod(Integer(x.unit() * inv_mod(w, m)), m);
  return {w, PadicNumber(p, Rational(pr), n)};
}

PadicNumber iwasawa_log(const PadicNumber& x) {
  if (x.is_zero()) throw DomainError("log of zero");
  long p = x.prime();
  long n = x.precision();
  PadicNumber u(p, Rational(x.unit()), n);
  Integer t = mod(Integer(unit_decompose(u).principal.unit() - 1), ipow(p, n));
  if (t == 0) return PadicNumber::zero(p, n);
  long vt = val(t, p);
  Rational sum = 0;
  Integer tk = 1;
  for (long k = 1;; ++k) {
    tk *= t;
    long logk = 0;
    for (long q = p; q <= k; q *= p) ++logk;
    // k*vt - log_p(k) is increasing, so every later term vanishes mod p^n
    if (k * vt - logk >= n) break;
    Rational term(tk, Integer(k));
    term.canonicalize();
    if (k % 2) sum += term; else sum -= term;
  }
  Integer r = reduce(sum, ipow(p, n));
  if (r == 0) return PadicNumber::zero(p, n);
  long v = val(r, p);
  return PadicNumber(p, Rational(r), n - v);
}

namespace detail {

PadicNumber exp(const PadicNumber& x) {
  long p = x.prime();
  long a = x.absolute_precision();
  if (x.is_zero()) return PadicNumber(p, 1, a);
  long v = x.valuation().value();
  if (v < (p == 2 ? 2 : 1)) throw DomainError("exp series does not converge");
  Rational xl = x.lift();
  Rational sum = 1, term = 1;
  long vfact = 0;
  for (long k = 1;; ++k) {
    term = term * xl / k;
    vfact += val(Integer(k), p);
    sum += term;
    // v(x^j/j!) >= j*(v - 1/(p-1)) is increasing; stop once past a
    if ((k + 1) * v - (vfact + val(Integer(k + 1), p)) >= a &&
        (k + 1) * (v * (p - 1) - 1) >= a * (p - 1))
      break;
  }
  return PadicNumber(p, Rational(reduce(sum, ipow(p, a))), a);
}

}  // namespace detail
}  // namespace iwasawa::padic
