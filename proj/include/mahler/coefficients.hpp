// Taylor coefficients a_k of Z(s) = exp(sum_{k>=2} (-1)^k eta(k) s^k / k),
// the moment values m_k = k! a_k they encode, and two independent ways to
// evaluate Z(s) itself. Z(s) equals Gamma(s+1)/Gamma(s/2+1)^2 on |s| < 1.
#pragma once

#include <cstdint>
#include <vector>

#include "mahler/precision.hpp"

namespace mahler {

// kernel coefficient b_k = (-1)^(k+1) (1 - 2^-k) zeta(k+1) for k >= 1;
// its magnitude is eta(k+1), strictly increasing toward 1
HPReal b_coeff(int k, const PrecisionContext& ctx);

// Immutable table of a_k, |a_k| companions A_k, kernel values b_k and their
// magnitudes B_k, and moments m_k, for k = 0..max_k (b, B for 1..max_k-1).
//
// The recurrence behind it: a_0 = 1, a_1 = 0, a_2 = zeta(2)/4, and for k >= 3
//     a_k = (1/k) sum_{j=0}^{k-2} a_j b_{k-1-j}.
// Every product in that sum carries the sign (-1)^k, so the sum is
// cancellation-free; A_k runs the same recurrence on magnitudes and must agree
// with |a_k| to near working precision, which construction enforces.
class CoefficientTable {
public:
    // assembles pre-computed columns without any validation; exists for
    // deserialization and for fault-injection in tests. build_table() is the
    // validated path and should be preferred everywhere else.
    CoefficientTable(PrecisionContext ctx, std::vector<HPReal> a,
                     std::vector<HPReal> big_a, std::vector<HPReal> b,
                     std::vector<HPReal> big_b, std::vector<HPReal> m,
                     std::uint64_t convolution_mults);

    int max_k() const { return static_cast<int>(a_.size()) - 1; }
    const PrecisionContext& ctx() const { return ctx_; }

    const HPReal& a(int k) const; // RangeError outside 0..max_k
    const HPReal& A(int k) const; // RangeError outside 0..max_k
    const HPReal& b(int k) const; // RangeError outside 1..max_k-1
    const HPReal& B(int k) const; // RangeError outside 1..max_k-1
    const HPReal& m(int k) const; // RangeError outside 0..max_k

    // number of long-precision multiplications spent in the two recurrences;
    // grows quadratically in max_k
    std::uint64_t convolution_mults() const { return mults_; }

private:
    PrecisionContext ctx_;
    std::vector<HPReal> a_, big_a_, b_, big_b_, m_;
    std::uint64_t mults_;
};

// builds and validates the full table for max_k = K >= 2. During construction
// enforces, and throws IntegrityError naming the first offending index if
// violated: B strictly increasing below 1 (checked on 1-B to survive rounding),
// sign of a_k equal to (-1)^k for k >= 2, |a_k| <= 1, and
// |A_k - |a_k|| < 10^(2-digits).
CoefficientTable build_table(int K, const PrecisionContext& ctx);

// m_k = k! a_k with the factorial held as an exact integer and applied in a
// single rounding; RangeError outside 0..max_k
const HPReal& higher_mahler(int k, const CoefficientTable& table);

// Z(s) summed directly as sum a_k s^k (Horner). Requires |s| < 1. The
// truncation tail is certified: |tail| <= |s|^(K+1)/(1-|s|) must be <=
// tail_tol or ResourceError reports the table order that would suffice.
HPReal z_series_eval(const HPReal& s, const CoefficientTable& table,
                     const HPReal& tail_tol);

// Z(s) through the exponential form exp(sum_{k=2}^K (-1)^k eta(k) s^k / k),
// truncation tail of the exponent bounded by |s|^(K+1)/((K+1)(1-|s|)).
// Requires |s| < 1 and K >= 2.
HPReal z_exp_eval(const HPReal& s, int K, const PrecisionContext& ctx);

} // namespace mahler
