// Double-exponential (tanh-sinh) quadrature over a finite interval, tuned for
// integrands with logarithmic endpoint singularities, plus the two moment
// integrals built on top of it: the direct definition of m_k and the function
// Z(s) as an integral.
#pragma once

#include <functional>
#include <string>

#include "mahler/precision.hpp"

namespace mahler {

// point e^(2 pi i angle) on the unit circle; the stored angle is the input
// reduced into [0, 1)
class UnitCirclePoint {
public:
    explicit UnitCirclePoint(const HPReal& angle);
    const HPReal& angle() const { return angle_; }

private:
    HPReal angle_;
};

struct QuadratureResult {
    HPReal value;
    HPReal error_estimate; // difference between the last two refinement levels
    int levels;            // refinement levels actually summed
    long nodes;            // integrand evaluations
};

// refinement stopped improving before reaching the tolerance; `best` holds
// the deepest estimate so callers can inspect how close it got
struct ConvergenceError : Error {
    QuadratureResult best;
    ConvergenceError(const std::string& msg, QuadratureResult best_)
        : Error(msg), best(std::move(best_)) {}
};

// the integrand returned NaN or infinity; `abscissa` is where
struct IntegrandError : Error {
    std::string abscissa;
    IntegrandError(const std::string& msg, std::string abscissa_)
        : Error(msg), abscissa(std::move(abscissa_)) {}
};

// Integrand callback: receives the abscissa x and the exactly-transformed
// distances to the two endpoints (x - a and b - x computed without
// cancellation), so a singular factor at an endpoint can be evaluated from
// the distance directly even when it is ~1e-200.
using Integrand =
    std::function<HPReal(const HPReal& x, const HPReal& dist_a, const HPReal& dist_b)>;

// Integrates f over [a, b]. Starts from step 1 and halves until two
// consecutive level totals differ by at most tol (absolute), then reports
// that difference as error_estimate. Throws ConvergenceError when max_level
// halvings are exhausted, IntegrandError on a non-finite sample, DomainError
// for a >= b, UsageError for tol <= 0 or max_level < 3.
QuadratureResult tanh_sinh(const Integrand& f, const HPReal& a, const HPReal& b,
                           const HPReal& tol, int max_level,
                           const PrecisionContext& ctx);

// refinement depth used by the moment integrals unless overridden
inline constexpr int kDefaultMaxLevel = 12;

// integral over one period of log^k |e^(2 pi i t) - r| dt for r = e^(2 pi i
// angle), split at the singularity; equals m_k of x - r. k = 0 returns
// exactly 1 without sampling. Throws DomainError for k < 0 and ResourceError
// when the endpoint resolution at this precision cannot support this k.
QuadratureResult mahler_integral(int k, const UnitCirclePoint& r, const HPReal& tol,
                                 const PrecisionContext& ctx,
                                 int max_level = kDefaultMaxLevel);

// integral over one period of |e^(2 pi i t) - r|^s dt, the generating value
// Z(s) at real s; requires s > -1 (the integral diverges at s = -1), s = 0
// returns exactly 1
QuadratureResult zeta_mahler_integral(const HPReal& s, const UnitCirclePoint& r,
                                      const HPReal& tol, const PrecisionContext& ctx,
                                      int max_level = kDefaultMaxLevel);

} // namespace mahler
