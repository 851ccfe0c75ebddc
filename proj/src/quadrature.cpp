#include "mahler/quadrature.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mahler {

UnitCirclePoint::UnitCirclePoint(const HPReal& angle) : angle_(angle) {
    if (!angle.finite())
        throw DomainError("UnitCirclePoint: angle must be finite");
    angle_ = angle - floor(angle);
    // a tiny negative angle can round the subtraction up to exactly 1
    if (angle_ >= HPReal::of_long(1, angle_.bits())) angle_ -= HPReal::of_long(1, angle_.bits());
}

namespace {

constexpr long kNodeBudget = 500000;

// hard emergency stop for the node rows; the contribution floor stops far
// earlier for every convergent integrand
const double kHardU = 1.0e6;

} // namespace

QuadratureResult tanh_sinh(const Integrand& f, const HPReal& a, const HPReal& b,
                           const HPReal& tol, int max_level,
                           const PrecisionContext& ctx) {
    if (!a.finite() || !b.finite()) throw DomainError("tanh_sinh: endpoints must be finite");
    if (!(a < b)) throw DomainError("tanh_sinh: need a < b");
    if (tol.is_nan() || !(tol > ctx.zero())) throw UsageError("tanh_sinh: tol must be positive");
    if (!tol.finite()) throw UsageError("tanh_sinh: tol must be finite");
    if (max_level < 3 || max_level > 24)
        throw UsageError("tanh_sinh: max_level must be in 3..24");

    const mpfr_prec_t prec = ctx.bits() + 32;
    const HPReal one = HPReal::of_long(1, prec);
    const HPReal g = (b - a).round_to(prec) / HPReal::of_long(2, prec); // half-width
    const HPReal two_g = g + g;
    const HPReal half_pi = ctx.pi().round_to(prec) / HPReal::of_long(2, prec);
    const HPReal gph = g * half_pi; // g * pi/2, weight prefactor

    // rows stop once the weight and the node contribution both fall below
    // this floor; the weight decays double-exponentially along a row
    const HPReal floor_eps = tol.round_to(prec) * ctx.pow10(-8).round_to(prec);

    const double t_hard = std::asinh(2.0 * kHardU / 3.141592653589793);

    long nodes = 0;

    // contribution of the node pair at distance t_abs >= 0; evaluates only the
    // sides still open, updates the open flags, and returns the summed value
    auto eval_pair = [&](const HPReal& t_abs, bool pair, bool& pos_open,
                         bool& neg_open) -> HPReal {
        HPReal sh(prec), ch(prec);
        sinh_cosh(t_abs, sh, ch);
        HPReal u = half_pi * sh;                        // >= 0
        HPReal ep = exp(-(u + u));                      // e^(-2u) <= 1
        HPReal wbase = gph * ch;                        // common even factor
        HPReal total(prec);

        const int sides = pair ? 2 : 1;
        for (int side = 0; side < sides; ++side) {
            const bool positive = (side == 0);
            if (positive && !pos_open) continue;
            if (!positive && !neg_open) continue;

            HPReal e = positive ? ep : one / ep;
            HPReal den = one + e;
            HPReal dist_a = two_g / den;       // x - a, exact at any depth
            HPReal dist_b = two_g * e / den;   // b - x, exact at any depth
            HPReal x = a + dist_a;
            HPReal w = wbase * HPReal::of_long(4, prec) * e / (den * den);

            HPReal fx = f(x, dist_a, dist_b);
            ++nodes;
            if (nodes > kNodeBudget)
                throw ResourceError("tanh_sinh: node budget exhausted; integrand decays "
                                    "too slowly toward an endpoint");
            if (fx.is_nan() || !fx.finite())
                throw IntegrandError("tanh_sinh: integrand not finite", x.sci(20));

            HPReal contrib = w * fx;
            if (w < floor_eps && contrib.abs() < floor_eps) {
                if (positive)
                    pos_open = false;
                else
                    neg_open = false;
            }
            total += contrib;
        }
        return total;
    };

    // level 0: full trapezoid at h = 1
    HPReal h = one;
    HPReal row(prec);
    {
        bool pos_open = true, neg_open = true;
        row += eval_pair(HPReal(prec), false, pos_open, neg_open); // t = 0 once
        pos_open = neg_open = true;
        for (long j = 1;; ++j) {
            HPReal t = HPReal::of_long(j, prec);
            if (t.to_double() > t_hard) break;
            row += eval_pair(t, true, pos_open, neg_open);
            if (!pos_open && !neg_open) break;
        }
    }
    HPReal total = row; // h = 1
    HPReal errest; // NaN until two levels exist
    int level = 0;

    for (level = 1; level <= max_level; ++level) {
        h /= HPReal::of_long(2, prec);
        HPReal sum(prec);
        bool pos_open = true, neg_open = true;
        for (long j = 1;; j += 2) {
            HPReal t = HPReal::of_long(j, prec) * h;
            if (t.to_double() > t_hard) break;
            sum += eval_pair(t, true, pos_open, neg_open);
            if (!pos_open && !neg_open) break;
        }
        HPReal next = total / HPReal::of_long(2, prec) + h * sum;
        errest = (next - total).abs();
        total = std::move(next);
        // accept only with a few levels behind us; a lucky early match of two
        // coarse totals is not convergence
        if (level >= 3 && errest <= tol) {
            QuadratureResult r{total.round_to(ctx.bits()), errest.round_to(ctx.bits()),
                               level, nodes};
            return r;
        }
    }

    QuadratureResult best{total.round_to(ctx.bits()),
                          errest.round_to(ctx.bits()), max_level, nodes};
    throw ConvergenceError("tanh_sinh: level " + std::to_string(max_level) +
                               " reached with estimate " + best.error_estimate.sci(3) +
                               " above tol " + tol.sci(3),
                           best);
}

/* ---------------- moment integrals ---------------- */

namespace {

void check_tol(const HPReal& tol) {
    if (tol.is_nan() || !tol.finite() || tol.sign() <= 0)
        throw UsageError("quadrature tolerance must be positive and finite");
}

// guard: the convergence target tol is absolute, so a value of magnitude
// ~k!/pi must still be resolvable within the working digits
void check_moment_resolvable(int k, const HPReal& tol, const PrecisionContext& ctx) {
    const double l10fact = std::lgamma(static_cast<double>(k) + 1.0) / std::log(10.0);
    const double l10tol = log(tol).to_double() / std::log(10.0);
    const double needed = l10fact - 0.5 - l10tol;
    if (needed > static_cast<double>(ctx.working_digits()) - 4.0) {
        const int suggest = static_cast<int>(std::ceil(needed)) + 10;
        throw ResourceError("mahler_integral: k=" + std::to_string(k) +
                            " at this tolerance needs about " +
                            std::to_string(static_cast<int>(std::ceil(needed))) +
                            " working digits; increase digits to >= " +
                            std::to_string(suggest));
    }
}

struct PanelSum {
    HPReal value;
    HPReal errest;
    int levels;
    long nodes;
};

// integrate f over the panels [0, phi] and [phi, 1] (or the symmetric half
// period when phi = 0), where f receives the exact distance to the
// singularity at phi
PanelSum split_at_singularity(const std::function<HPReal(const HPReal&)>& from_dist,
                              const HPReal& phi, const HPReal& tol, int max_level,
                              const PrecisionContext& ctx) {
    const HPReal half_tol = tol / ctx.from_long(2);
    if (phi.is_zero()) {
        // distance to the singular point 0 is dist_a; 1/2 is a regular end
        Integrand f = [&](const HPReal&, const HPReal& da, const HPReal&) {
            return from_dist(da);
        };
        QuadratureResult q = tanh_sinh(f, ctx.zero(), ctx.one() / ctx.from_long(2),
                                       half_tol, max_level, ctx);
        const HPReal two = ctx.from_long(2);
        return PanelSum{two * q.value, two * q.error_estimate, q.levels, q.nodes};
    }
    Integrand left = [&](const HPReal&, const HPReal&, const HPReal& db) {
        return from_dist(db);
    };
    Integrand right = [&](const HPReal&, const HPReal& da, const HPReal&) {
        return from_dist(da);
    };
    QuadratureResult q1 = tanh_sinh(left, ctx.zero(), phi, half_tol, max_level, ctx);
    QuadratureResult q2 = tanh_sinh(right, phi, ctx.one(), half_tol, max_level, ctx);
    return PanelSum{q1.value + q2.value, q1.error_estimate + q2.error_estimate,
                    std::max(q1.levels, q2.levels), q1.nodes + q2.nodes};
}

} // namespace

QuadratureResult mahler_integral(int k, const UnitCirclePoint& r, const HPReal& tol,
                                 const PrecisionContext& ctx, int max_level) {
    if (k < 0) throw DomainError("mahler_integral: k must be >= 0");
    check_tol(tol);
    if (k == 0) return QuadratureResult{ctx.one(), ctx.zero(), 0, 1};
    check_moment_resolvable(k, tol, ctx);

    const HPReal pi = ctx.pi();
    const HPReal two = ctx.from_long(2);
    const long kl = k;
    auto from_dist = [&](const HPReal& d) {
        // |e^(2 pi i t) - e^(2 pi i phi)| = 2 sin(pi d) for d = |t - phi| in [0, 1]
        return pow_si(log(two * sin(pi * d)), kl);
    };
    const HPReal phi = r.angle().round_to(ctx.bits());
    PanelSum p = split_at_singularity(from_dist, phi, tol, max_level, ctx);
    return QuadratureResult{p.value, p.errest, p.levels, p.nodes};
}

QuadratureResult zeta_mahler_integral(const HPReal& s, const UnitCirclePoint& r,
                                      const HPReal& tol, const PrecisionContext& ctx,
                                      int max_level) {
    if (!s.finite()) throw DomainError("zeta_mahler_integral: s must be finite");
    if (!(s > ctx.from_long(-1)))
        throw DomainError("zeta_mahler_integral: need s > -1, the integral diverges");
    check_tol(tol);
    if (s.is_zero()) return QuadratureResult{ctx.one(), ctx.zero(), 0, 1};

    const HPReal pi = ctx.pi();
    const HPReal two = ctx.from_long(2);
    const HPReal se = s.round_to(ctx.bits() + 32);
    auto from_dist = [&](const HPReal& d) { return pow(two * sin(pi * d), se); };
    const HPReal phi = r.angle().round_to(ctx.bits());
    PanelSum p = split_at_singularity(from_dist, phi, tol, max_level, ctx);
    return QuadratureResult{p.value, p.errest, p.levels, p.nodes};
}

} // namespace mahler
