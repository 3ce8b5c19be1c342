#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwasawa/padic.hpp"

namespace iwasawa::lambda {

using padic::PadicNumber;

// Power series in Z_p[[T]] known modulo (p^N, T^K).
class LambdaElement {
 public:
  LambdaElement(long p, long N, long K, std::vector<Integer> coeffs = {});
  static LambdaElement constant(long p, long N, long K, const Integer& c);
  static LambdaElement t(long p, long N, long K);  // the element T
  // Parses "p=3 N=30 K=40 coeffs=[3,3,1]"; missing N or K fall back to defaults.
  static LambdaElement parse(const std::string& text, long default_N = 30, long default_K = 40);

  long prime() const { return p_; }
  long N() const { return N_; }
  long K() const { return K_; }
  const Integer& operator[](long i) const { return c_[i]; }
  const std::vector<Integer>& coeffs() const { return c_; }
  std::vector<Integer> centered() const;
  long degree_bound() const;  // 1 + index of the last nonzero coefficient
  bool is_zero() const;

  LambdaElement operator-() const;
  friend LambdaElement operator+(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator-(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator*(const Integer& s, const LambdaElement& a);
  friend bool operator==(const LambdaElement& a, const LambdaElement& b);

  LambdaElement with_precision(long N, long K) const;
  LambdaElement inverse() const;  // requires a unit constant term
  std::string to_string() const;

 private:
  long p_, N_, K_;
  std::vector<Integer> c_;  // residues in [0, p^N), size K
};

struct DistinguishedPoly {
  long p = 2;
  std::vector<Integer> coeffs;  // ascending, monic, residues mod p^precision
  long precision = 1;           // p-adic digits certified for the coefficients

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::vector<Integer> centered() const;
  std::string to_string() const;
};

struct MuLambda {
  long mu;
  long lambda;
};
MuLambda mu_lambda(const LambdaElement& f);

struct Prepared {
  long mu;
  DistinguishedPoly d;
  LambdaElement u;
  std::vector<long> u_precision;  // certified digits of each unit coefficient
};
Prepared weierstrass_prepare(const LambdaElement& f);

struct Theta {
  LambdaElement value;
  bool truncated;  // p^n >= K
};
Theta theta(long n, long p, long N, long K);

struct QuotientOrder {
  long free_rank;
  long e_n;
  bool truncated;
};
// Largest p^n accepted; reads IWASAWA_MAX_PN (default 128).
long max_pn();
QuotientOrder quotient_order(const LambdaElement& f, long n);
// v_p(Res(f, theta_n)) computed from the exact integer polynomials; nullopt when zero.
std::optional<long> resultant_valuation(const LambdaElement& f, long n);

struct GrowthParams {
  long lambda;
  long mu;
  long nu;
  long n0;
  long lambda0;
  std::vector<QuotientOrder> data;  // n = 0..n_max
};
GrowthParams growth_fit(const LambdaElement& f, long n_max);

LambdaElement involution(const LambdaElement& f);

Verdict associates_check(const LambdaElement& f, const LambdaElement& g, long min_digits = 3);

long mod_p_shape(const LambdaElement& f);

PadicNumber default_kappa(long p, long N);
PadicNumber evaluate_Lp(const LambdaElement& f, const PadicNumber& s, const PadicNumber& kappa);

struct FeSolution {
  Verdict status;  // yes: solution found; no: none exists; indeterminate
  int w = 1;
  std::optional<PadicNumber> c;
};
FeSolution fe_solve(const LambdaElement& f);

struct LambdaModulePresentation {
  long p;
  std::vector<std::vector<LambdaElement>> rows;  // square; rows are relations
};
LambdaElement char_ideal(const LambdaModulePresentation& X);
long min_generators(const LambdaModulePresentation& X);

// p-adic valuations of the elementary divisors of an integer matrix mod p^N.
// Divisors indistinguishable from zero are reported as nullopt.
std::vector<std::optional<long>> local_elementary_divisors(std::vector<std::vector<Integer>> a, long p, long N);

}  // namespace iwasawa::lambda
