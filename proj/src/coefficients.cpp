#include "mahler/coefficients.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <gmp.h>

#include "mahler/special.hpp"

namespace mahler {

HPReal b_coeff(int k, const PrecisionContext& ctx) {
    if (k < 1) throw DomainError("b_coeff: k must be >= 1");
    HPReal mag = eta_int(k + 1, ctx);
    return (k % 2 == 0) ? -mag : mag;
}

/* ---------------- CoefficientTable ---------------- */

CoefficientTable::CoefficientTable(PrecisionContext ctx, std::vector<HPReal> a,
                                   std::vector<HPReal> big_a, std::vector<HPReal> b,
                                   std::vector<HPReal> big_b, std::vector<HPReal> m,
                                   std::uint64_t convolution_mults)
    : ctx_(std::move(ctx)),
      a_(std::move(a)),
      big_a_(std::move(big_a)),
      b_(std::move(b)),
      big_b_(std::move(big_b)),
      m_(std::move(m)),
      mults_(convolution_mults) {
    // structural coherence only; numeric invariants are build_table's job
    if (a_.size() < 3 || big_a_.size() != a_.size() || m_.size() != a_.size() ||
        b_.size() + 1 != a_.size() || big_b_.size() != b_.size())
        throw UsageError("CoefficientTable: column sizes are inconsistent");
}

namespace {
void check_index(int k, int lo, int hi, const char* what) {
    if (k < lo || k > hi)
        throw RangeError(std::string(what) + ": index out of range: k=" +
                         std::to_string(k) + " (valid " + std::to_string(lo) +
                         ".." + std::to_string(hi) + ")");
}
} // namespace

const HPReal& CoefficientTable::a(int k) const {
    check_index(k, 0, max_k(), "a");
    return a_[static_cast<std::size_t>(k)];
}
const HPReal& CoefficientTable::A(int k) const {
    check_index(k, 0, max_k(), "A");
    return big_a_[static_cast<std::size_t>(k)];
}
const HPReal& CoefficientTable::b(int k) const {
    check_index(k, 1, max_k() - 1, "b");
    return b_[static_cast<std::size_t>(k)];
}
const HPReal& CoefficientTable::B(int k) const {
    check_index(k, 1, max_k() - 1, "B");
    return big_b_[static_cast<std::size_t>(k)];
}
const HPReal& CoefficientTable::m(int k) const {
    check_index(k, 0, max_k(), "m");
    return m_[static_cast<std::size_t>(k)];
}

/* ---------------- build_table ---------------- */

CoefficientTable build_table(int K, const PrecisionContext& ctx) {
    if (K < 2) throw DomainError("build_table: max_k must be >= 2");
    const mpfr_prec_t bits = ctx.bits();
    const HPReal one = ctx.one();
    std::uint64_t mults = 0;

    const std::size_t n = static_cast<std::size_t>(K) + 1;
    std::vector<HPReal> a(n, HPReal(bits)), big_a(n, HPReal(bits)), m(n, HPReal(bits));
    std::vector<HPReal> b(n - 1, HPReal()), big_b(n - 1, HPReal()); // [0] stays NaN

    // kernel magnitudes B_k = eta(k+1) through the deficit so the strict
    // growth check compares quantities that do not round to 1
    {
        HPReal prev_deficit = ctx.zero(); // sentinel; real check starts at k=2
        for (int k = 1; k <= K - 1; ++k) {
            HPReal d = eta_deficit(k + 1, ctx);
            if (!(d > ctx.zero()))
                throw IntegrityError(
                    "build_table: kernel magnitude not strictly below 1 at k=" +
                        std::to_string(k),
                    k);
            if (k >= 2 && !(d < prev_deficit))
                throw IntegrityError(
                    "build_table: kernel magnitude not strictly increasing at k=" +
                        std::to_string(k),
                    k);
            prev_deficit = d;
            big_b[static_cast<std::size_t>(k)] = one - d;
            b[static_cast<std::size_t>(k)] = (k % 2 == 0)
                                                 ? -big_b[static_cast<std::size_t>(k)]
                                                 : big_b[static_cast<std::size_t>(k)];
        }
    }

    a[0] = one;
    big_a[0] = one;
    a[1] = ctx.zero();
    big_a[1] = ctx.zero();

    // a_2 from the closed form zeta(2)/4; A_2 from the magnitude recurrence,
    // so the two columns cross-check each other from the start
    a[2] = zeta_int(2, ctx) / ctx.from_long(4);
    {
        HPReal s(bits);
        s.add_mul(big_a[0], big_b[1]);
        ++mults;
        big_a[2] = s / ctx.from_long(2);
    }

    mpz_t fact;
    mpz_init_set_ui(fact, 1u);
    mpfr_t mt;
    mpfr_init2(mt, bits);

    const HPReal tol_pair = ctx.eps(2); // 10^(2-digits)

    try {
        for (int k = 0; k <= K; ++k) {
            if (k >= 3) {
                HPReal s(bits), sa(bits);
                for (int j = 0; j <= k - 2; ++j) {
                    s.add_mul(a[static_cast<std::size_t>(j)],
                              b[static_cast<std::size_t>(k - 1 - j)]);
                    sa.add_mul(big_a[static_cast<std::size_t>(j)],
                               big_b[static_cast<std::size_t>(k - 1 - j)]);
                    mults += 2;
                }
                const HPReal kk = ctx.from_long(k);
                a[static_cast<std::size_t>(k)] = s / kk;
                big_a[static_cast<std::size_t>(k)] = sa / kk;
            }

            const HPReal& ak = a[static_cast<std::size_t>(k)];
            if (k >= 2) {
                const int want = (k % 2 == 0) ? 1 : -1;
                if (ak.sign() != want)
                    throw IntegrityError(
                        "build_table: coefficient sign pattern broken at k=" +
                            std::to_string(k),
                        k);
                if (!(ak.abs() <= one))
                    throw IntegrityError(
                        "build_table: coefficient magnitude above 1 at k=" +
                            std::to_string(k),
                        k);
                if (!((big_a[static_cast<std::size_t>(k)] - ak.abs()).abs() < tol_pair))
                    throw IntegrityError(
                        "build_table: magnitude recurrence disagrees with |a| at k=" +
                            std::to_string(k),
                        k);
            }

            if (k >= 1) mpz_mul_ui(fact, fact, static_cast<unsigned long>(k));
            mpfr_mul_z(mt, ak.raw(), fact, MPFR_RNDN);
            m[static_cast<std::size_t>(k)] = HPReal::of_raw(mt, bits);
        }
    } catch (...) {
        mpz_clear(fact);
        mpfr_clear(mt);
        throw;
    }
    mpz_clear(fact);
    mpfr_clear(mt);

    return CoefficientTable(ctx, std::move(a), std::move(big_a), std::move(b),
                            std::move(big_b), std::move(m), mults);
}

const HPReal& higher_mahler(int k, const CoefficientTable& table) {
    return table.m(k);
}

/* ---------------- Z evaluation ---------------- */

HPReal z_series_eval(const HPReal& s, const CoefficientTable& table,
                     const HPReal& tail_tol) {
    const PrecisionContext& ctx = table.ctx();
    if (!s.finite()) throw DomainError("z_series_eval: s must be finite");
    const HPReal as = s.abs();
    const HPReal one = ctx.one();
    if (!(as < one)) throw DomainError("z_series_eval: need |s| < 1");
    if (tail_tol.is_nan() || !(tail_tol > ctx.zero()))
        throw UsageError("z_series_eval: tail_tol must be positive");

    const int K = table.max_k();
    const HPReal bound = pow_si(as, K + 1) / (one - as);
    if (!(bound <= tail_tol)) {
        // smallest order whose certified tail fits under tail_tol
        const double ls = log(as).to_double();
        const double lt = log(tail_tol * (one - as)).to_double();
        const long need = static_cast<long>(std::ceil(lt / ls)) - 1;
        throw ResourceError("z_series_eval: table max_k=" + std::to_string(K) +
                            " gives certified tail " + bound.sci(3) +
                            " above tail_tol " + tail_tol.sci(3) +
                            "; need max_k >= " + std::to_string(need));
    }

    HPReal acc = table.a(K);
    for (int k = K - 1; k >= 0; --k) {
        HPReal t = table.a(k);
        t.add_mul(acc, s);
        acc = std::move(t);
    }
    return acc;
}

HPReal z_exp_eval(const HPReal& s, int K, const PrecisionContext& ctx) {
    if (!s.finite()) throw DomainError("z_exp_eval: s must be finite");
    if (!(s.abs() < ctx.one())) throw DomainError("z_exp_eval: need |s| < 1");
    if (K < 2) throw DomainError("z_exp_eval: truncation order must be >= 2");

    HPReal expo = ctx.zero();
    HPReal sp = s * s; // s^k, starting at k=2
    for (int k = 2; k <= K; ++k) {
        HPReal term = eta_int(k, ctx) * sp / ctx.from_long(k);
        if (k % 2 == 0)
            expo += term;
        else
            expo -= term;
        sp *= s;
    }
    return exp(expo);
}

} // namespace mahler
