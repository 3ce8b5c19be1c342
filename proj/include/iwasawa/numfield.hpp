#pragma once

#include <memory>
#include <string>
#include <vector>

#include "iwasawa/curve.hpp"

namespace iwasawa::nf {

// Q[x]/(g) for a monic integer polynomial g (ascending coefficients).
class NumberField {
 public:
  // Irreducibility is checked for degree <= 4 and taken on trust above.
  static std::shared_ptr<const NumberField> make(std::vector<Integer> g);

  const std::vector<Integer>& modulus() const { return g_; }
  long degree() const { return static_cast<long>(g_.size()) - 1; }
  bool irreducibility_checked() const { return degree() <= 4; }
  std::string to_string() const;

 private:
  explicit NumberField(std::vector<Integer> g) : g_(std::move(g)) {}
  std::vector<Integer> g_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

bool is_irreducible_small(const std::vector<Integer>& g);  // degree <= 4, monic

class NFElement {
 public:
  NFElement(FieldPtr K, std::vector<Rational> c);
  NFElement(FieldPtr K, const Rational& r);
  static NFElement generator(FieldPtr K);

  const FieldPtr& field() const { return K_; }
  const std::vector<Rational>& coeffs() const { return c_; }  // length = degree
  bool is_zero() const;
  bool is_rational() const;
  NFElement inverse() const;
  std::string to_string(const std::string& var = "x") const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend bool operator==(const NFElement& a, const NFElement& b);

 private:
  FieldPtr K_;
  std::vector<Rational> c_;
};

enum class NFOp { add, mul, inv };
NFElement nf_arith(const NFElement& a, const NFElement& b, NFOp op);

struct NFPoint {
  bool infinity = true;
  std::vector<NFElement> xy;  // empty at infinity, else {x, y}

  static NFPoint at_infinity() { return {}; }
  static NFPoint affine(NFElement x, NFElement y);
  const NFElement& x() const { return xy.at(0); }
  const NFElement& y() const { return xy.at(1); }
  std::string to_string() const;
  friend bool operator==(const NFPoint& a, const NFPoint& b);
};

bool on_curve(const ec::AInvs& a, const NFPoint& P);
NFPoint negate(const ec::AInvs& a, const NFPoint& P);
// Throw DomainError for points off the curve.
NFPoint add(const ec::AInvs& a, const NFPoint& P, const NFPoint& Q);
NFPoint multiply(const ec::AInvs& a, const NFPoint& P, long n);

// sigma: x -> h(x); requires g(h) = 0 mod g.
NFElement galois_apply(const NFElement& e, const NFElement& h);
NFPoint galois_apply(const NFPoint& P, const NFElement& h);
// P + sigma(P) for an involution sigma.
NFPoint trace_to_subfield(const ec::AInvs& a, const NFPoint& P, const NFElement& h);

struct ScenarioResult {
  std::string name;
  bool pass;
  std::vector<std::string> details;
};

std::vector<ScenarioResult> verify_worked_points();

}  // namespace iwasawa::nf
