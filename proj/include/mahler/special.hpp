// Dirichlet eta and Riemann zeta at integer arguments, and the real Gamma
// function on (0, 3]. Everything here is deterministic and accurate to the
// context's working precision, with errors far below 10^-digits.
#pragma once

#include "mahler/precision.hpp"

namespace mahler {

// 1 - eta(k) = sum_{n>=2} (-1)^n n^-k, computed directly so the result keeps
// full relative accuracy even when it is ~2^-k and eta(k) itself would round
// to 1. Requires k >= 2.
HPReal eta_deficit(int k, const PrecisionContext& ctx);

// eta(k) = sum_{n>=1} (-1)^(n+1) n^-k for k >= 2
HPReal eta_int(int k, const PrecisionContext& ctx);

// zeta(k) for integer k >= 2, derived from eta(k) = (1 - 2^(1-k)) zeta(k)
HPReal zeta_int(int k, const PrecisionContext& ctx);

// zeta(k) - zeta(k+1) for k >= 2 without subtracting two nearly equal values:
// both terms are rewritten over the common denominator
// (1 - 2^(1-k))(1 - 2^-k), where the numerator reduces to
// 2^-k - d(k)(1 - 2^-k) + d(k+1)(1 - 2^(1-k)) with d = eta_deficit.
HPReal zeta_gap(int k, const PrecisionContext& ctx);

// Gamma(x) for 0 < x <= 3 via Spouge's expansion of Gamma(x+1), evaluated at
// boosted internal precision to absorb the cancellation in the term sum.
HPReal gamma_real(const HPReal& x, const PrecisionContext& ctx);

} // namespace mahler
