#pragma once

#include "iwasawa/curve.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa::ec {

inline constexpr long kMaxQCoefficients = 600;

// Coefficients of q*j(q) = 1 + 744 q + 196884 q^2 + ...
std::vector<Integer> j_qexpansion(long count);

struct TatePeriod {
  padic::PadicNumber q;
  long residual_valuation;  // v_l(j(q) - j_E), at least the requested digits
};

// Solves j(q) = j_E in Q_l by Newton iteration; needs ord_l(j) < 0.
TatePeriod tate_period(const WeierstrassCurve& E, long ell, long digits, long max_coefficients = kMaxQCoefficients);

}  // namespace iwasawa::ec
