#include "mahler/verify.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"
#include "mahler/special.hpp"

namespace mahler {

namespace {

constexpr int kDetailSig = 6; // significant digits for numbers inside detail text

std::string num(const HPReal& x) {
    return x.finite() ? x.sci(kDetailSig) : std::string("nan");
}

// k*|a_{k+1}+a_k|, the decay quantity shared by three checks
HPReal decay_term(const CoefficientTable& table, int k, const PrecisionContext& ctx) {
    return ctx.from_long(k) * (table.a(k + 1) + table.a(k)).abs();
}

ClaimCheck failed_check(const std::string& id, const std::string& statement,
                        const std::string& why) {
    ClaimCheck c;
    c.claim_id = id;
    c.statement = statement;
    c.pass = false;
    c.detail = "check did not run: " + why;
    return c;
}

const char* kStmtA = "k*|a(k+1)+a(k)| <= 5*(1+zeta(2)) over 4 <= k <= K-1";
const char* kStmtB = "||a(k)| - 1/pi| within scheduled tolerance at each pinned k";
const char* kStmtC =
    "k*|a(k+1)+a(k)| under scheduled bounds and strictly decreasing on the "
    "geometric sample k = 10, 20, 40, ...";
const char* kStmtD = "|a(k+1)/a(k) + 1| within scheduled tolerance at each pinned k";
const char* kStmt33 = "|a(k)| <= 1 over 1 <= k <= k_max";
const char* kStmt34 = "k^2*(zeta(k) - zeta(k+1)) <= 1 over 4 <= k <= k_max";
const char* kStmt35 = "k^2*(B(k) - B(k-1)) <= 1 over 2 <= k <= kb";
const char* kStmt31 = "sign(a(k)) alternates as (-1)^k over 2 <= k <= k_max";
const char* kStmt32 = "B(k) strictly increasing with 1 - B(kb) <= 3*2^-(kb+1)";
const char* kStmtSG = "power-series evaluation matches Gamma(s+1)/Gamma(s/2+1)^2 on the grid";
const char* kStmtGI = "Gamma(s+1)/Gamma(s/2+1)^2 = (4/s)*Gamma(s)/Gamma(s/2)^2 on grid points in (0,1)";
const char* kStmtFL = "Gamma(2-s)/Gamma(1-s/2)^2 at s=1 equals 1/pi";
const char* kStmtFT = "deviation of (1-s)*f(-s) from 1/pi shrinks from s=0.9 to s=0.99";
const char* kStmtMQ = "k!*a(k) matches the direct integral for 0 <= k <= quad_k_max";

} // namespace

ClaimCheck check_theorem_a(const CoefficientTable& table) {
    const PrecisionContext& ctx = table.ctx();
    if (table.max_k() < 6)
        throw RangeError("decay bound check needs max_k >= 6, table has " +
                         std::to_string(table.max_k()));
    ClaimCheck c;
    c.claim_id = "thm-a";
    c.statement = kStmtA;
    HPReal worst = ctx.zero();
    int arg = 4;
    for (int k = 4; k + 1 <= table.max_k(); ++k) {
        HPReal g = decay_term(table, k, ctx);
        if (g > worst) {
            worst = g;
            arg = k;
        }
    }
    // the bound constant, with zeta(2) computed at runtime
    c.bound_or_target = ctx.from_long(5) * (ctx.one() + zeta_int(2, ctx));
    c.tolerance = ctx.zero();
    c.observed = worst;
    c.pass = worst <= c.bound_or_target;
    std::ostringstream d;
    d << "max " << num(worst) << " at k=" << arg << ", bound "
      << num(c.bound_or_target) << ", range 4.." << table.max_k() - 1;
    c.detail = d.str();
    return c;
}

ClaimCheck check_theorem_b(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& tol_at) {
    const PrecisionContext& ctx = table.ctx();
    if (tol_at.empty())
        throw UsageError("limit check needs a non-empty (k, tolerance) schedule");
    ClaimCheck c;
    c.claim_id = "thm-b";
    c.statement = kStmtB;
    HPReal inv_pi = ctx.one() / ctx.pi();
    HPReal worst = ctx.zero();
    bool all = true;
    bool any_scored = false;
    std::ostringstream d;
    for (const auto& [k, tol] : tol_at) {
        if (k > table.max_k())
            throw RangeError("scheduled k=" + std::to_string(k) + " exceeds max_k=" +
                             std::to_string(table.max_k()));
        if (k < 0)
            throw UsageError("scheduled k must be nonnegative, got " + std::to_string(k));
        HPReal dev = (table.a(k).abs() - inv_pi).abs();
        if (!d.str().empty()) d << "; ";
        if (k < 2) {
            // a_0 = 1 and a_1 = 0 sit far from the limit by construction:
            // report, but do not score
            d << "k=" << k << ": dev " << num(dev) << " (informational, "
              << "excluded from pass logic)";
            continue;
        }
        bool ok = dev <= tol;
        d << "k=" << k << ": dev " << num(dev) << (ok ? " <= " : " > ") << num(tol);
        all = all && ok;
        if (!any_scored || dev > worst) {
            worst = dev;
            c.bound_or_target = tol;
            c.tolerance = tol;
            any_scored = true;
        }
    }
    if (!any_scored) {
        // every entry was informational; nothing was actually tested
        c.observed = ctx.zero();
        c.bound_or_target = ctx.zero();
        c.tolerance = ctx.zero();
        c.pass = false;
        c.detail = d.str() + "; no scored entries (all k < 2)";
        return c;
    }
    c.observed = worst;
    c.pass = all;
    c.detail = d.str();
    return c;
}

ClaimCheck check_theorem_c(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& threshold_at) {
    const PrecisionContext& ctx = table.ctx();
    ClaimCheck c;
    c.claim_id = "thm-c";
    c.statement = kStmtC;
    bool all = true;
    std::ostringstream d;
    int widest = -1;
    for (const auto& [k, bound] : threshold_at) {
        if (k < 1)
            throw UsageError("scheduled k must be >= 1, got " + std::to_string(k));
        if (k + 1 > table.max_k())
            throw RangeError("scheduled k=" + std::to_string(k) +
                             " needs a(k+1); table ends at " +
                             std::to_string(table.max_k()));
        HPReal g = decay_term(table, k, ctx);
        bool ok = g <= bound;
        if (!d.str().empty()) d << "; ";
        d << "k=" << k << ": " << num(g) << (ok ? " <= " : " > ") << num(bound);
        all = all && ok;
        if (k > widest) {
            widest = k;
            c.observed = g;
            c.bound_or_target = bound;
        }
    }
    // geometric subsequence, fixed start and ratio, clipped to the table
    std::vector<HPReal> samples;
    std::ostringstream seq;
    for (int k = 10; k + 1 <= table.max_k(); k *= 2) {
        samples.push_back(decay_term(table, k, ctx));
        if (!seq.str().empty()) seq << ", ";
        seq << "k=" << k << ": " << num(samples.back());
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < samples.size(); ++i)
        decreasing = decreasing && samples[i] < samples[i - 1];
    all = all && decreasing;
    if (widest < 0) {
        // no scheduled bounds; report the subsequence endpoints instead
        if (!samples.empty()) {
            c.observed = samples.back();
            c.bound_or_target = samples.front();
        } else {
            c.observed = ctx.zero();
            c.bound_or_target = ctx.zero();
        }
    }
    c.tolerance = ctx.zero();
    c.pass = all;
    if (!d.str().empty()) d << "; ";
    if (samples.size() >= 2)
        d << "sample [" << seq.str() << "] strictly decreasing: "
          << (decreasing ? "yes" : "no");
    else
        d << "decay sample has " << samples.size()
          << " point(s), monotonicity vacuous";
    c.detail = d.str();
    return c;
}

ClaimCheck check_theorem_d(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& tol_at) {
    const PrecisionContext& ctx = table.ctx();
    ClaimCheck c;
    c.claim_id = "thm-d";
    c.statement = kStmtD;
    HPReal worst = ctx.zero();
    bool all = true;
    bool any = false;
    std::ostringstream d;
    for (const auto& [k, tol] : tol_at) {
        if (k < 2)
            throw UsageError("ratio undefined below k=2 (a(1) = 0), got k=" +
                             std::to_string(k));
        if (k + 1 > table.max_k())
            throw RangeError("scheduled k=" + std::to_string(k) +
                             " needs a(k+1); table ends at " +
                             std::to_string(table.max_k()));
        HPReal dev = (table.a(k + 1) / table.a(k) + ctx.one()).abs();
        bool ok = dev <= tol;
        if (!d.str().empty()) d << "; ";
        d << "k=" << k << ": |ratio+1| " << num(dev) << (ok ? " <= " : " > ")
          << num(tol);
        all = all && ok;
        if (!any || dev > worst) {
            worst = dev;
            c.bound_or_target = tol;
            c.tolerance = tol;
            any = true;
        }
    }
    if (!any) {
        c.observed = ctx.zero();
        c.bound_or_target = ctx.zero();
        c.tolerance = ctx.zero();
        c.pass = true;
        c.detail = "no scheduled entries";
        return c;
    }
    c.observed = worst;
    c.pass = all;
    c.detail = d.str();
    return c;
}

std::vector<ClaimCheck> check_lemmas_remarks(const CoefficientTable& table,
                                             const PrecisionContext& ctx, int k_max) {
    if (k_max > table.max_k())
        throw RangeError("k_max=" + std::to_string(k_max) + " exceeds max_k=" +
                         std::to_string(table.max_k()));
    if (k_max < 4)
        throw UsageError("sweeps need k_max >= 4, got " + std::to_string(k_max));
    std::vector<ClaimCheck> out;

    // |a_k| <= 1 over 1..k_max
    {
        ClaimCheck c;
        c.claim_id = "lemma-3.3";
        c.statement = kStmt33;
        HPReal worst = ctx.zero();
        int arg = 1;
        for (int k = 1; k <= k_max; ++k) {
            HPReal v = table.a(k).abs();
            if (v > worst) {
                worst = v;
                arg = k;
            }
        }
        c.observed = worst;
        c.bound_or_target = ctx.one();
        c.tolerance = ctx.zero();
        c.pass = worst <= c.bound_or_target;
        std::ostringstream d;
        d << "max |a(k)| " << num(worst) << " at k=" << arg << ", range 1.." << k_max;
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    // k^2 * (zeta(k) - zeta(k+1)) <= 1 over 4..k_max, the gap computed
    // cancellation-free
    {
        ClaimCheck c;
        c.claim_id = "lemma-3.4";
        c.statement = kStmt34;
        HPReal worst = ctx.zero();
        int arg = 4;
        for (int k = 4; k <= k_max; ++k) {
            HPReal v = ctx.from_long(static_cast<long>(k) * k) * zeta_gap(k, ctx);
            if (v > worst) {
                worst = v;
                arg = k;
            }
        }
        c.observed = worst;
        c.bound_or_target = ctx.one();
        c.tolerance = ctx.zero();
        c.pass = worst <= c.bound_or_target;
        std::ostringstream d;
        d << "max k^2*gap " << num(worst) << " at k=" << arg << ", range 4.." << k_max;
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    // the kernel magnitudes B_k live on 1..max_k-1, so both B statements are
    // swept to kb; their increments come from the alternating-tail deficits
    // d(k) = 1 - B_{k-1}, which keep full relative accuracy where the B
    // values themselves round to 1
    const int kb = std::min(k_max, table.max_k() - 1);
    std::vector<HPReal> defic;
    defic.reserve(static_cast<std::size_t>(kb) + 2);
    for (int k = 2; k <= kb + 2; ++k) defic.push_back(eta_deficit(k, ctx));
    auto deficit_at = [&](int k) -> const HPReal& {
        return defic[static_cast<std::size_t>(k - 2)];
    };

    // k^2 * (B_k - B_{k-1}) <= 1 over 2..kb
    {
        ClaimCheck c;
        c.claim_id = "lemma-3.5";
        c.statement = kStmt35;
        HPReal worst = ctx.zero();
        int arg = 2;
        for (int k = 2; k <= kb; ++k) {
            HPReal inc = deficit_at(k) - deficit_at(k + 1); // = B_k - B_{k-1}
            HPReal v = ctx.from_long(static_cast<long>(k) * k) * inc;
            if (v > worst) {
                worst = v;
                arg = k;
            }
        }
        c.observed = worst;
        c.bound_or_target = ctx.one();
        c.tolerance = ctx.zero();
        c.pass = worst <= c.bound_or_target;
        std::ostringstream d;
        d << "max k^2*(B(k)-B(k-1)) " << num(worst) << " at k=" << arg
          << ", range 2.." << kb;
        if (kb < k_max) d << " (capped: B ends at max_k-1)";
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    // sign(a_k) = (-1)^k over 2..k_max
    {
        ClaimCheck c;
        c.claim_id = "remark-3.1";
        c.statement = kStmt31;
        long violations = 0;
        int first_bad = -1;
        for (int k = 2; k <= k_max; ++k) {
            int expect = (k % 2 == 0) ? 1 : -1;
            if (table.a(k).sign() != expect) {
                ++violations;
                if (first_bad < 0) first_bad = k;
            }
        }
        c.observed = ctx.from_long(violations);
        c.bound_or_target = ctx.zero();
        c.tolerance = ctx.zero();
        c.pass = violations == 0;
        std::ostringstream d;
        if (violations == 0)
            d << "signs verified for k=2.." << k_max;
        else
            d << violations << " violation(s), first at k=" << first_bad;
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    // B strictly increasing up to kb, and the tail 1 - B_kb = d(kb+1) under
    // three halves of the first omitted kernel term 2^-(kb+1)
    {
        ClaimCheck c;
        c.claim_id = "remark-3.2";
        c.statement = kStmt32;
        bool increasing = true;
        int first_flat = -1;
        for (int k = 2; k <= kb; ++k) {
            // B_k > B_{k-1}  <=>  d(k) > d(k+1)
            if (!(deficit_at(k + 1) < deficit_at(k))) {
                increasing = false;
                if (first_flat < 0) first_flat = k;
            }
        }
        c.observed = deficit_at(kb + 1); // = 1 - B_kb
        c.bound_or_target = ctx.from_long(3) * pow_si(ctx.from_long(2), -(kb + 1));
        c.tolerance = ctx.zero();
        bool tail_ok = c.observed <= c.bound_or_target;
        c.pass = increasing && tail_ok;
        std::ostringstream d;
        d << "1-B(" << kb << ") = " << num(c.observed) << (tail_ok ? " <= " : " > ")
          << num(c.bound_or_target) << "; increasing over 1.." << kb << ": "
          << (increasing ? "yes" : "no");
        if (first_flat > 0) d << " (first non-increase at k=" << first_flat << ")";
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    return out;
}

std::vector<ClaimCheck> check_closed_forms(const CoefficientTable& table,
                                           const PrecisionContext& ctx,
                                           const std::vector<HPReal>& s_grid) {
    for (const HPReal& s : s_grid)
        if (!(s.abs() < ctx.one()))
            throw DomainError("grid point " + s.sci(8) + " outside (-1, 1)");
    std::vector<ClaimCheck> out;
    const int K = table.max_k();
    HPReal half = ctx.parse("0.5");
    HPReal tiny = ctx.eps(0);

    auto gamma_form = [&](const HPReal& s) {
        HPReal gh = gamma_real(s * half + ctx.one(), ctx);
        return gamma_real(s + ctx.one(), ctx) / (gh * gh);
    };
    // certified truncation bound sum_{k>K} |a_k s^k| <= |s|^{K+1}/(1-|s|),
    // from |a_k| <= 1
    auto tail_bound = [&](const HPReal& s) {
        HPReal m = s.abs();
        return pow_si(m, K + 1) / (ctx.one() - m);
    };

    // series vs Gamma on the whole grid
    {
        ClaimCheck c;
        c.claim_id = "series-gamma";
        c.statement = kStmtSG;
        HPReal worst = ctx.zero();
        bool all = true;
        bool any = false;
        std::ostringstream d;
        for (const HPReal& s : s_grid) {
            HPReal bound = tail_bound(s);
            HPReal series = z_series_eval(s, table, bound + bound + tiny);
            HPReal diff = (series - gamma_form(s)).abs();
            HPReal tol = bound + bound + ctx.eps(3);
            bool ok = diff <= tol;
            if (!d.str().empty()) d << "; ";
            d << "s=" << s.sci(3) << ": diff " << num(diff) << (ok ? " <= " : " > ")
              << num(tol);
            all = all && ok;
            if (!any || diff > worst) {
                worst = diff;
                c.bound_or_target = tol;
                c.tolerance = tol;
                any = true;
            }
        }
        c.observed = any ? worst : ctx.zero();
        if (!any) {
            c.bound_or_target = ctx.zero();
            c.tolerance = ctx.zero();
            c.detail = "empty grid";
            c.pass = true;
        } else {
            c.pass = all;
            c.detail = d.str();
        }
        out.push_back(std::move(c));
    }

    // the two Gamma forms against each other on grid points in (0, 1); they
    // are linked by Gamma(x+1) = x*Gamma(x) applied at s and s/2, so this
    // exercises the functional equation of the Gamma evaluator
    {
        ClaimCheck c;
        c.claim_id = "gamma-identity";
        c.statement = kStmtGI;
        HPReal worst = ctx.zero();
        bool all = true;
        bool any = false;
        std::ostringstream d;
        HPReal tol = ctx.eps(3);
        for (const HPReal& s : s_grid) {
            if (!(s > ctx.zero() && s < ctx.one())) continue;
            HPReal gh = gamma_real(s * half, ctx);
            HPReal rhs = ctx.from_long(4) / s * gamma_real(s, ctx) / (gh * gh);
            HPReal diff = (gamma_form(s) - rhs).abs();
            bool ok = diff <= tol;
            if (!d.str().empty()) d << "; ";
            d << "s=" << s.sci(3) << ": diff " << num(diff) << (ok ? " <= " : " > ")
              << num(tol);
            all = all && ok;
            if (!any || diff > worst) worst = diff;
            any = true;
        }
        c.observed = any ? worst : ctx.zero();
        c.bound_or_target = tol;
        c.tolerance = tol;
        c.pass = any ? all : true;
        c.detail = any ? d.str() : "no grid points in (0, 1)";
        out.push_back(std::move(c));
    }

    // the limit value at s=1 through the pole-free form: Gamma(2-s) carries
    // the (1-s) factor, so s=1 is a plain evaluation Gamma(1)/Gamma(1/2)^2
    {
        ClaimCheck c;
        c.claim_id = "f-limit";
        c.statement = kStmtFL;
        HPReal gh = gamma_real(half, ctx);
        HPReal val = gamma_real(ctx.one(), ctx) / (gh * gh);
        HPReal inv_pi = ctx.one() / ctx.pi();
        c.observed = (val - inv_pi).abs();
        c.bound_or_target = ctx.eps(4);
        c.tolerance = c.bound_or_target;
        c.pass = c.observed <= c.tolerance;
        std::ostringstream d;
        d << "value " << val.sci(kDetailSig) << ", 1/pi " << inv_pi.sci(kDetailSig)
          << ", |diff| " << num(c.observed);
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    // the same limit approached through the series: F(s) = (1-s)*f(-s)
    // should sit closer to 1/pi at s=0.99 than at s=0.9. The truncation
    // effect on F is at most |s|^{K+1}, reported alongside.
    {
        ClaimCheck c;
        c.claim_id = "f-limit-trend";
        c.statement = kStmtFT;
        HPReal inv_pi = ctx.one() / ctx.pi();
        auto f_dev = [&](const HPReal& s) {
            HPReal bound = tail_bound(s);
            HPReal f = z_series_eval(ctx.zero() - s, table, bound + bound + tiny);
            return ((ctx.one() - s) * f - inv_pi).abs();
        };
        HPReal s1 = ctx.parse("0.9");
        HPReal s2 = ctx.parse("0.99");
        HPReal dev1 = f_dev(s1);
        HPReal dev2 = f_dev(s2);
        c.observed = dev2;
        c.bound_or_target = dev1;
        c.tolerance = ctx.zero();
        c.pass = dev2 < dev1;
        std::ostringstream d;
        d << "dev(0.9) " << num(dev1) << ", dev(0.99) " << num(dev2)
          << "; truncation effect on F at most " << num(pow_si(s1, K + 1)) << " and "
          << num(pow_si(s2, K + 1)) << " respectively";
        c.detail = d.str();
        out.push_back(std::move(c));
    }

    return out;
}

VerificationReport run_all(int K, const PrecisionContext& ctx,
                           const Schedules& schedules) {
    VerificationReport rep;
    rep.digits = ctx.digits();
    rep.guard_digits = ctx.guard_digits();
    rep.max_k = K;

    std::vector<CoefficientTable> holder; // built table, if construction succeeds
    try {
        holder.push_back(build_table(K, ctx));
    } catch (const Error& e) {
        rep.checks.push_back(failed_check(
            "table-build", "coefficient table construction and validation", e.what()));
        rep.overall_pass = false;
        return rep;
    }
    const CoefficientTable& table = holder.front();

    auto guard_one = [&rep](const std::string& id, const std::string& statement,
                            auto&& fn) {
        try {
            rep.checks.push_back(fn());
        } catch (const Error& e) {
            rep.checks.push_back(failed_check(id, statement, e.what()));
        }
    };
    auto guard_list = [&rep](const std::string& id, const std::string& statement,
                             auto&& fn) {
        try {
            auto list = fn();
            rep.checks.insert(rep.checks.end(), list.begin(), list.end());
        } catch (const Error& e) {
            rep.checks.push_back(failed_check(id, statement, e.what()));
        }
    };

    guard_one("thm-a", kStmtA, [&] { return check_theorem_a(table); });
    guard_one("thm-b", kStmtB,
              [&] { return check_theorem_b(table, schedules.limit_abs); });
    guard_one("thm-c", kStmtC,
              [&] { return check_theorem_c(table, schedules.decay_bounds); });
    guard_one("thm-d", kStmtD,
              [&] { return check_theorem_d(table, schedules.ratio_tols); });
    guard_list("lemmas-remarks", "elementary bound and sign sweeps", [&] {
        return check_lemmas_remarks(table, ctx, schedules.lemma_k_max);
    });
    guard_list("closed-forms", "closed-form comparisons on the s grid", [&] {
        return check_closed_forms(table, ctx, schedules.s_grid);
    });

    // moments from the recurrence against direct quadrature of the defining
    // integral at angle 0
    guard_one("m-quad-agreement", kStmtMQ, [&] {
        ClaimCheck c;
        c.claim_id = "m-quad-agreement";
        c.statement = kStmtMQ;
        UnitCirclePoint r(ctx.zero());
        int upto = std::min(schedules.quad_k_max, table.max_k());
        HPReal worst = ctx.zero();
        bool all = true;
        bool any = false;
        std::ostringstream d;
        for (int k = 0; k <= upto; ++k) {
            QuadratureResult qr = mahler_integral(k, r, schedules.quad_tol, ctx);
            HPReal diff = (qr.value - table.m(k)).abs();
            // allowance: quadrature tolerance with headroom, plus the
            // rounding floor of the table moment itself
            HPReal allow = ctx.from_long(100) * schedules.quad_tol +
                           ctx.eps(2) * (ctx.one() + table.m(k).abs());
            bool ok = diff <= allow;
            all = all && ok;
            if (!any || diff > worst) {
                worst = diff;
                c.bound_or_target = allow;
                c.tolerance = allow;
                any = true;
            }
            if (!d.str().empty()) d << "; ";
            d << "k=" << k << ": diff " << num(diff) << (ok ? " <= " : " > ")
              << num(allow);
        }
        c.observed = worst;
        c.pass = all;
        c.detail = d.str();
        return c;
    });

    rep.overall_pass = true;
    for (const ClaimCheck& c : rep.checks) rep.overall_pass = rep.overall_pass && c.pass;
    return rep;
}

Schedules Schedules::defaults(int max_k, const PrecisionContext& ctx) {
    Schedules s;
    const int K = max_k;
    const int far = std::min(K, 1000);

    // far-point tolerances: the reference run shows the true deviations
    // shrink like 3^-k (||a_k| - 1/pi| ~ 0.014*3^-k), so 3^-k keeps a
    // 30-70x true margin at any k; once that sinks below the rounding
    // floor the precision-scaled eps takes over
    auto far_tol = [&](int k) {
        HPReal geo = pow_si(ctx.from_long(3), -k);
        HPReal eps = ctx.eps(3);
        return geo > eps ? geo : eps;
    };

    // (k, tolerance) pins for the |a_k| -> 1/pi limit: two fixed points
    // calibrated against the 50-digit reference run, plus a far point
    if (K >= 12) s.limit_abs.emplace_back(12, ctx.parse("1e-6"));
    if (K >= 30) s.limit_abs.emplace_back(30, ctx.parse("1e-10"));
    if (far > 30) s.limit_abs.emplace_back(far, far_tol(far));

    const int decay_far = std::min(K - 1, 1000);
    if (decay_far >= 10) s.decay_bounds.emplace_back(decay_far, ctx.parse("1e-3"));

    if (K - 1 >= 20) s.ratio_tols.emplace_back(20, ctx.parse("1e-4"));
    const int ratio_far = std::min(K - 1, 1000);
    if (ratio_far > 20) s.ratio_tols.emplace_back(ratio_far, far_tol(ratio_far));

    s.lemma_k_max = std::min(K, 1000);

    s.s_grid = {ctx.parse("-0.9"), ctx.parse("-0.5"), ctx.zero(), ctx.parse("0.5"),
                ctx.parse("0.9")};
    s.quad_tol = ctx.parse("1e-12");
    s.quad_k_max = std::min(12, K);
    return s;
}

} // namespace mahler
