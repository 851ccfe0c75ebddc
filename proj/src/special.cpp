#include "mahler/special.hpp"

#include <cmath>

namespace mahler {

namespace {

// Internal accuracy target: working digits plus a fixed cushion, evaluated at
// boosted binary precision so the returned value is correctly rounded for all
// practical purposes at the context precision.
constexpr int kCushionDigits = 14;
constexpr mpfr_prec_t kCushionBits = 48;

// Chebyshev-weighted acceleration of sum_{j>=0} (-1)^j (j+2)^-k. Error decays
// like (3+sqrt(8))^-n relative to the leading term, so n is sized from the
// decimal target. Valid while the sum keeps a few terms of the same scale;
// callers switch to plain summation once (j+2)^-k collapses too fast.
void accelerated_deficit(mpfr_t out, long k, int dec_target, mpfr_prec_t prec) {
    const long n = static_cast<long>(std::ceil(1.30617 * dec_target)) + 2;

    mpfr_t d, b, c, s, t;
    mpfr_inits2(prec, d, b, c, s, t, static_cast<mpfr_ptr>(nullptr));

    mpfr_sqrt_ui(t, 8u, MPFR_RNDN);
    mpfr_add_ui(t, t, 3u, MPFR_RNDN);
    mpfr_pow_ui(d, t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_ui_div(t, 1u, d, MPFR_RNDN);
    mpfr_add(d, d, t, MPFR_RNDN);
    mpfr_div_2ui(d, d, 1, MPFR_RNDN);

    mpfr_set_si(b, -1, MPFR_RNDN);
    mpfr_neg(c, d, MPFR_RNDN);
    mpfr_set_zero(s, 1);

    for (long j = 0; j < n; ++j) {
        mpfr_sub(c, b, c, MPFR_RNDN);
        mpfr_ui_pow_ui(t, static_cast<unsigned long>(j + 2),
                       static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div(t, c, t, MPFR_RNDN);
        // c alternates sign by itself (b flips each step), so the term is
        // always added; the series' signs live in the weights
        mpfr_add(s, s, t, MPFR_RNDN);
        mpfr_mul_si(b, b, j + n, MPFR_RNDN);
        mpfr_mul_si(b, b, j - n, MPFR_RNDN);
        mpfr_mul_2ui(b, b, 1, MPFR_RNDN);
        mpfr_div_ui(b, b, static_cast<unsigned long>(2 * j + 1), MPFR_RNDN);
        mpfr_div_ui(b, b, static_cast<unsigned long>(j + 1), MPFR_RNDN);
    }

    mpfr_div(out, s, d, MPFR_RNDN);
    mpfr_clears(d, b, c, s, t, static_cast<mpfr_ptr>(nullptr));
}

// Plain alternating summation of sum_{m>=2} (-1)^m m^-k. Used when the terms
// drop so fast that only a handful matter; then every added term improves the
// relative error by a factor (m/2)^-k and a dozen terms reach any sane target.
void direct_deficit(mpfr_t out, long k, int dec_target, mpfr_prec_t prec) {
    mpfr_t s, t, thresh;
    mpfr_inits2(prec, s, t, thresh, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(s, 1);

    // stop once term/first < 10^-(target+2); first term is 2^-k
    mpfr_ui_pow_ui(thresh, 10u, static_cast<unsigned long>(dec_target + 2), MPFR_RNDN);
    mpfr_ui_div(thresh, 1u, thresh, MPFR_RNDN);
    mpfr_mul_2si(thresh, thresh, -k, MPFR_RNDN);

    const int cap = 200;
    bool done = false;
    for (int m = 2; m < 2 + cap; ++m) {
        mpfr_ui_pow_ui(t, static_cast<unsigned long>(m),
                       static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_ui_div(t, 1u, t, MPFR_RNDN);
        if (m & 1)
            mpfr_sub(s, s, t, MPFR_RNDN);
        else
            mpfr_add(s, s, t, MPFR_RNDN);
        if (mpfr_cmp(t, thresh) < 0) {
            done = true;
            break;
        }
    }
    mpfr_clears(t, thresh, static_cast<mpfr_ptr>(nullptr));
    if (!done) {
        mpfr_clear(s);
        throw ResourceError("eta_deficit: direct summation exceeded 200 terms");
    }
    mpfr_swap(out, s);
    mpfr_clear(s);
}

} // namespace

HPReal eta_deficit(int k, const PrecisionContext& ctx) {
    if (k < 2) throw DomainError("eta_deficit: k must be >= 2");

    const int dec_target = ctx.working_digits() + kCushionDigits;
    const mpfr_prec_t prec = ctx.bits() + kCushionBits;

    // acceleration degrades once 2^-k sinks below ~10^(-working/2): the terms
    // then decay so unevenly that its weighted sum loses relative accuracy,
    // while plain summation needs only ~10 terms there. Switch at that point.
    const long k_switch = static_cast<long>(std::ceil(1.661 * ctx.working_digits())) + 1;

    mpfr_t out;
    mpfr_init2(out, prec);
    try {
        if (k <= k_switch)
            accelerated_deficit(out, k, dec_target, prec);
        else
            direct_deficit(out, k, dec_target, prec);
    } catch (...) {
        mpfr_clear(out);
        throw;
    }

    HPReal r = HPReal::of_raw(out, ctx.bits());
    mpfr_clear(out);
    return r;
}

HPReal eta_int(int k, const PrecisionContext& ctx) {
    if (k < 2) throw DomainError("eta_int: k must be >= 2");
    return ctx.one() - eta_deficit(k, ctx);
}

HPReal zeta_int(int k, const PrecisionContext& ctx) {
    if (k < 2) throw DomainError("zeta_int: k must be >= 2");
    // 1 - 2^(1-k) is exact in binary, so the only rounding is the division
    HPReal denom = ctx.one() - pow_si(ctx.from_long(2), 1 - k);
    return eta_int(k, ctx) / denom;
}

HPReal zeta_gap(int k, const PrecisionContext& ctx) {
    if (k < 2) throw DomainError("zeta_gap: k must be >= 2");
    const HPReal one = ctx.one();
    const HPReal two = ctx.from_long(2);
    const HPReal p  = pow_si(two, -k);      // 2^-k, exact
    const HPReal p1 = pow_si(two, 1 - k);   // 2^(1-k), exact
    const HPReal dk  = eta_deficit(k, ctx);
    const HPReal dk1 = eta_deficit(k + 1, ctx);
    HPReal num = p - dk * (one - p) + dk1 * (one - p1);
    HPReal den = (one - p1) * (one - p);
    return num / den;
}

HPReal gamma_real(const HPReal& x, const PrecisionContext& ctx) {
    if (!x.finite()) throw DomainError("gamma_real: argument must be finite");
    if (x.sign() <= 0) throw DomainError("gamma_real: argument must be positive");
    if (x > ctx.from_long(3)) throw DomainError("gamma_real: argument must be <= 3");

    // Spouge expansion of Gamma(z+1) with z = x. The term sum cancels several
    // digits, so both the shape parameter and the binary precision get a boost
    // beyond the context target.
    const int dec_target = ctx.working_digits() + 10;
    const long a = static_cast<long>(std::ceil(1.2533 * dec_target)) + 3;
    const mpfr_prec_t prec = ctx.bits() + 64;

    mpfr_t z, sum, term, efac, fact, base, t;
    mpfr_inits2(prec, z, sum, term, efac, fact, base, t, static_cast<mpfr_ptr>(nullptr));

    mpfr_set(z, x.raw(), MPFR_RNDN);

    // sum = sqrt(2 pi)
    mpfr_const_pi(sum, MPFR_RNDN);
    mpfr_mul_2ui(sum, sum, 1, MPFR_RNDN);
    mpfr_sqrt(sum, sum, MPFR_RNDN);

    mpfr_set_ui(fact, 1u, MPFR_RNDN); // (j-1)! running
    for (long j = 1; j < a; ++j) {
        if (j > 1) mpfr_mul_ui(fact, fact, static_cast<unsigned long>(j - 1), MPFR_RNDN);
        // c_j = (-1)^(j-1) / (j-1)! * (a-j)^(j-1/2) * e^(a-j)
        mpfr_set_si(base, a - j, MPFR_RNDN);
        mpfr_set_si(t, 2 * j - 1, MPFR_RNDN);
        mpfr_div_2ui(t, t, 1, MPFR_RNDN); // j - 1/2
        mpfr_pow(term, base, t, MPFR_RNDN);
        mpfr_set_si(t, a - j, MPFR_RNDN);
        mpfr_exp(efac, t, MPFR_RNDN);
        mpfr_mul(term, term, efac, MPFR_RNDN);
        mpfr_div(term, term, fact, MPFR_RNDN);
        // divide by (z + j) and accumulate with alternating sign
        mpfr_add_si(t, z, j, MPFR_RNDN);
        mpfr_div(term, term, t, MPFR_RNDN);
        if (j & 1)
            mpfr_add(sum, sum, term, MPFR_RNDN);
        else
            mpfr_sub(sum, sum, term, MPFR_RNDN);
    }

    // Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) * sum; Gamma(x) = Gamma(z+1)/z
    mpfr_add_si(base, z, a, MPFR_RNDN);
    mpfr_set_d(t, 0.5, MPFR_RNDN);
    mpfr_add(t, t, z, MPFR_RNDN);
    mpfr_pow(term, base, t, MPFR_RNDN);
    mpfr_neg(base, base, MPFR_RNDN);
    mpfr_exp(efac, base, MPFR_RNDN);
    mpfr_mul(term, term, efac, MPFR_RNDN);
    mpfr_mul(term, term, sum, MPFR_RNDN);
    mpfr_div(term, term, z, MPFR_RNDN);

    HPReal r = HPReal::of_raw(term, ctx.bits());
    mpfr_clears(z, sum, term, efac, fact, base, t, static_cast<mpfr_ptr>(nullptr));
    return r;
}

} // namespace mahler
