#pragma once

#include <iosfwd>
#include <optional>

#include "iwasawa/arith.hpp"

namespace iwasawa::padic {

class Valuation {
 public:
  Valuation() : inf_(true), v_(0) {}
  Valuation(long v) : inf_(false), v_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return inf_; }
  long value() const;  // throws DomainError when infinite

  friend Valuation operator+(Valuation a, Valuation b);
  friend bool operator==(Valuation a, Valuation b);
  friend bool operator<(Valuation a, Valuation b);
  friend bool operator<=(Valuation a, Valuation b) { return !(b < a); }
  friend Valuation min(Valuation a, Valuation b) { return b < a ? b : a; }
  friend std::ostream& operator<<(std::ostream& os, Valuation v);

 private:
  bool inf_;
  long v_;
};

// x = p^v * u with u known modulo p^N.  A zero carries only the absolute
// precision to which it is known (stored in v).
class PadicNumber {
 public:
  PadicNumber(long p, const Rational& x, long digits);
  static PadicNumber zero(long p, long absolute_precision);
  // x known modulo p^absolute_precision.
  static PadicNumber from_residue(long p, const Rational& x, long absolute_precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  Valuation valuation() const;
  long precision() const { return zero_ ? 0 : n_; }
  long absolute_precision() const { return zero_ ? v_ : v_ + n_; }
  const Integer& unit() const { return u_; }
  bool is_unit() const { return !zero_ && v_ == 0; }
  bool is_integral() const { return zero_ ? true : v_ >= 0; }

  Rational lift() const;           // p^v * u, u in [0, p^N)
  Rational centered_lift() const;  // u taken in (-p^N/2, p^N/2]
  PadicNumber with_precision(long digits) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);

  // Agreement to the smaller of the two absolute precisions.
  bool agrees_with(const PadicNumber& y) const;
  friend std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

 private:
  PadicNumber() = default;
  static PadicNumber make(long p, long v, long n, Integer u);

  long p_ = 2;
  long v_ = 0;
  long n_ = 1;
  Integer u_;
  bool zero_ = false;
};

enum class Op { add, sub, mul, div };
PadicNumber padic_arith(const PadicNumber& x, const PadicNumber& y, Op op);

struct UnitDecomposition {
  Integer teichmuller;  // residue mod p^N
  PadicNumber principal;
};
UnitDecomposition unit_decompose(const PadicNumber& x);

Integer teichmuller(const Integer& a, long p, long digits);

// log_p with log_p(p) = 0; result known to the absolute precision of the
// unit part of x.
PadicNumber iwasawa_log(const PadicNumber& x);

namespace detail {
// exp(x) for v(x) > 1/(p-1).
PadicNumber exp(const PadicNumber& x);
}  // namespace detail

}  // namespace iwasawa::padic
