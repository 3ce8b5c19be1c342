#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iwasawa {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {  // precondition violated by the input
  using Error::Error;
};
struct PrecisionError : Error {  // working precision exhausted
  using Error::Error;
};
struct BoundError : Error {  // a configured size or search bound was hit
  using Error::Error;
};

enum class Verdict { yes, no, indeterminate };
const char* to_string(Verdict v);

Integer ipow(const Integer& b, unsigned long e);
Integer ipow(long b, unsigned long e);
Rational qpow(const Rational& b, long e);

// Least nonnegative residue.
Integer mod(const Integer& a, const Integer& m);
long mod(const Integer& a, long m);
Integer inv_mod(const Integer& a, const Integer& m);  // throws DomainError

// v_p(n) for n != 0; throws DomainError on zero.
long val(const Integer& n, long p);
long val(const Rational& q, long p);

bool is_prime(const Integer& n);
bool is_prime(long n);
long next_prime(long n);  // smallest prime > n
std::vector<long> primes_up_to(long n);

// Full factorisation via trial division and Pollard rho.
std::vector<std::pair<Integer, int>> factor(Integer n);
std::vector<Integer> prime_divisors(const Integer& n);
// positive divisors of n != 0, ascending
std::vector<Integer> divisors(const Integer& n);

int kronecker(const Integer& a, const Integer& n);
bool is_square(const Integer& n);
Integer isqrt(const Integer& n);
Integer squarefree_part(const Integer& n);

// Rational square test in Q_l.
bool is_local_square(const Rational& x, long l);

// Reduction of a rational with denominator prime to m.
Integer reduce(const Rational& q, const Integer& m);

Integer binomial(unsigned long n, unsigned long k);

std::string str(const Integer& n);
std::string str(const Rational& q);
Rational parse_rational(const std::string& s);  // "a", "-a/b"

}  // namespace iwasawa
