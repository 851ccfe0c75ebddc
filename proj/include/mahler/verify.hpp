// Executable checks for the analytic facts behind the coefficient table: the
// boundedness and decay of k*|a_{k+1}+a_k|, the limit |a_k| -> 1/pi, the
// ratio limit a_{k+1}/a_k -> -1, the elementary bounds on the zeta gaps and
// the kernel magnitudes, the sign pattern, and the closed forms tying the
// power series to Gamma. Each check reports an observed quantity, the bound
// or target it was compared against, and a pass flag; the report aggregates
// them so one failed claim fails the run.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahler/coefficients.hpp"
#include "mahler/precision.hpp"

namespace mahler {

// one verified claim. pass reflects the comparison between observed,
// bound_or_target and tolerance exactly as `statement` describes; detail
// carries the specifics (which k achieved the max, per-entry margins, or the
// error text when the check could not run).
struct ClaimCheck {
    std::string claim_id;
    std::string statement;
    HPReal observed;
    HPReal bound_or_target;
    HPReal tolerance;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    int digits = 0;
    int guard_digits = 0;
    int max_k = 0;
    bool overall_pass = false;
    std::vector<ClaimCheck> checks; // order is fixed and documented in README
};

// finite-k sampling plans for the limit statements. The limits themselves
// admit no finite test; every (k, tolerance) pair here was pinned against a
// 50-digit brute-force run and is checked as stated, nothing looser.
struct Schedules {
    // (k, tolerance) entries for | |a_k| - 1/pi | <= tolerance
    std::vector<std::pair<int, HPReal>> limit_abs;
    // (k, bound) entries for k*|a_{k+1}+a_k| <= bound
    std::vector<std::pair<int, HPReal>> decay_bounds;
    // (k, tolerance) entries for |a_{k+1}/a_k + 1| <= tolerance
    std::vector<std::pair<int, HPReal>> ratio_tols;
    // upper end of the sweep ranges for the elementary-bound checks
    int lemma_k_max = 0;
    // evaluation points in (-1, 1) for the closed-form comparisons
    std::vector<HPReal> s_grid;
    // absolute tolerance handed to the quadrature cross-check
    HPReal quad_tol;
    // cross-check table moments against quadrature for 0 <= k <= quad_k_max
    int quad_k_max = 12;

    // the plan used by the CLI: pinned tolerances at k = 12 and 30, far-end
    // entries that scale with the working precision, sweeps over the whole
    // table, the five-point s grid, quadrature tolerance 1e-12 for k <= 12
    static Schedules defaults(int max_k, const PrecisionContext& ctx);
};

// max over 4 <= k <= max_k-1 of k*|a_{k+1}+a_k| against 5*(1+zeta(2)), with
// zeta(2) computed at runtime. RangeError when max_k < 6.
ClaimCheck check_theorem_a(const CoefficientTable& table);

// | |a_k| - 1/pi | <= tol at every scheduled k >= 2; entries with k < 2 are
// reported in detail but excluded from pass logic (a_0 = 1, a_1 = 0 are not
// part of the limit). UsageError on an empty schedule, RangeError when a
// scheduled k exceeds max_k.
ClaimCheck check_theorem_b(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& tol_at);

// k*|a_{k+1}+a_k| <= bound at every scheduled k, and the same quantity
// sampled at k = 10, 20, 40, 80, ... (while k <= max_k-1) strictly
// decreases. RangeError when a scheduled k exceeds max_k-1.
ClaimCheck check_theorem_c(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& threshold_at);

// |a_{k+1}/a_k + 1| <= tol at every scheduled k. UsageError when a scheduled
// k is below 2 (a_1 = 0 makes that ratio undefined), RangeError when k+1
// exceeds max_k.
ClaimCheck check_theorem_d(const CoefficientTable& table,
                           const std::vector<std::pair<int, HPReal>>& tol_at);

// the five elementary sweeps, each quantified up to k_max (capped at
// max_k-1 where the statement involves B):
//   lemma-3.3   |a_k| <= 1                       for 1 <= k <= k_max
//   lemma-3.4   zeta(k)-zeta(k+1) <= 1/k^2       for 4 <= k <= k_max
//   lemma-3.5   B_k - B_{k-1} <= 1/k^2           for 2 <= k <= k_max
//   remark-3.1  sign(a_k) = (-1)^k               for 2 <= k <= k_max
//   remark-3.2  B_k strictly increasing, and 1 - B_kb <= 3*2^-(kb+1)
// RangeError when k_max exceeds max_k, UsageError when k_max < 4.
std::vector<ClaimCheck> check_lemmas_remarks(const CoefficientTable& table,
                                             const PrecisionContext& ctx, int k_max);

// closed-form comparisons on the s grid (each point must lie in (-1, 1)):
//   series-gamma    series evaluation vs Gamma(s+1)/Gamma(s/2+1)^2
//   gamma-identity  Gamma(s+1)/Gamma(s/2+1)^2 vs (4/s)Gamma(s)/Gamma(s/2)^2
//                   on the grid points in (0, 1)
//   f-limit         Gamma(2-s)/Gamma(1-s/2)^2 at s=1 vs 1/pi
//   f-limit-trend   deviation of (1-s)*f(-s) from 1/pi shrinks from s=0.9
//                   to s=0.99
std::vector<ClaimCheck> check_closed_forms(const CoefficientTable& table,
                                           const PrecisionContext& ctx,
                                           const std::vector<HPReal>& s_grid);

// builds the table once, runs every check above plus the quadrature
// cross-check of m_k for k <= quad_k_max, and aggregates. A check that
// throws is recorded as a failed ClaimCheck carrying the error text; only
// table construction failure short-circuits (into a single failed check).
VerificationReport run_all(int K, const PrecisionContext& ctx,
                           const Schedules& schedules);

} // namespace mahler
