// Arbitrary-precision scalar type and the precision policy object shared by
// every numeric routine in the library.
#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mahler/errors.hpp"

namespace mahler {

// Real number backed by an MPFR value. Value semantics: each object owns its
// storage and carries its own precision; binary operations produce a result at
// the wider of the two operand precisions, rounded to nearest. All operations
// are deterministic: identical inputs at identical precision give identical
// bits on every run.
class HPReal {
public:
    HPReal();                          // NaN at minimal precision
    explicit HPReal(mpfr_prec_t bits); // zero at the given precision

    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal of_long(long v, mpfr_prec_t bits);
    // exact binary value of the double; do not feed decimal literals through
    // this for values like 0.1 that doubles cannot represent
    static HPReal of_double(double v, mpfr_prec_t bits);
    // parses a decimal string; throws UsageError on anything but a full match
    static HPReal parse(std::string_view text, mpfr_prec_t bits);
    // copy of an MPFR value, rounded to `bits` (interop with raw-MPFR kernels)
    static HPReal of_raw(mpfr_srcptr v, mpfr_prec_t bits);

    mpfr_prec_t bits() const;
    bool finite() const;  // neither NaN nor infinite
    bool is_nan() const;
    bool is_zero() const;
    int sign() const; // -1, 0, +1; throws DomainError on NaN
    double to_double() const;

    // scientific-notation decimal string with exactly `significant` digits
    // (one lead digit, significant-1 decimals, two-digit exponent minimum)
    std::string sci(int significant) const;

    HPReal abs() const;
    // value rounded (to nearest) to a different precision
    HPReal round_to(mpfr_prec_t bits) const;

    // *this += x*y with a single rounding at the end (fused)
    void add_mul(const HPReal& x, const HPReal& y);
    // *this -= x*y with a single rounding at the end (fused)
    void sub_mul(const HPReal& x, const HPReal& y);

    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    HPReal& operator/=(const HPReal& o);

    friend HPReal operator+(const HPReal& x, const HPReal& y);
    friend HPReal operator-(const HPReal& x, const HPReal& y);
    friend HPReal operator*(const HPReal& x, const HPReal& y);
    friend HPReal operator/(const HPReal& x, const HPReal& y);
    friend HPReal operator-(const HPReal& x);

    // comparisons are false when either side is NaN (except !=, true then)
    friend bool operator<(const HPReal& x, const HPReal& y);
    friend bool operator<=(const HPReal& x, const HPReal& y);
    friend bool operator>(const HPReal& x, const HPReal& y);
    friend bool operator>=(const HPReal& x, const HPReal& y);
    friend bool operator==(const HPReal& x, const HPReal& y);
    friend bool operator!=(const HPReal& x, const HPReal& y);

    // read-only view of the underlying MPFR value (printing, interop)
    mpfr_srcptr raw() const;

private:
    mpfr_t v_;

    friend class PrecisionContext;
    friend HPReal exp(const HPReal&);
    friend HPReal log(const HPReal&);
    friend HPReal sqrt(const HPReal&);
    friend HPReal sin(const HPReal&);
    friend HPReal cos(const HPReal&);
    friend HPReal sinh(const HPReal&);
    friend HPReal cosh(const HPReal&);
    friend HPReal tanh(const HPReal&);
    friend HPReal floor(const HPReal&);
    friend HPReal pow(const HPReal&, const HPReal&);
    friend HPReal pow_si(const HPReal&, long);
    friend void sinh_cosh(const HPReal&, HPReal&, HPReal&);
};

HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);  // DomainError for x <= 0
HPReal sqrt(const HPReal& x); // DomainError for x < 0
HPReal sin(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal sinh(const HPReal& x);
HPReal cosh(const HPReal& x);
HPReal tanh(const HPReal& x);
HPReal floor(const HPReal& x);
HPReal pow(const HPReal& base, const HPReal& expo);
HPReal pow_si(const HPReal& base, long e);
// simultaneous sinh and cosh of x into s and c (one argument reduction)
void sinh_cosh(const HPReal& x, HPReal& s, HPReal& c);

// Precision policy: requested decimal digits plus guard digits define one
// working binary precision used for every intermediate value. Immutable after
// construction and cheap to copy; caches pi and log(2) at working precision.
class PrecisionContext {
public:
    // digits >= 15 and guard_digits >= 10, else DomainError
    explicit PrecisionContext(int digits, int guard_digits = 10);

    int digits() const { return digits_; }
    int guard_digits() const { return guard_; }
    int working_digits() const { return digits_ + guard_; }
    mpfr_prec_t bits() const { return bits_; }

    const HPReal& pi() const { return pi_; }
    const HPReal& ln2() const { return ln2_; }

    HPReal zero() const;
    HPReal one() const;
    HPReal from_long(long v) const;
    HPReal from_double(double v) const;
    HPReal parse(std::string_view text) const;
    HPReal pow10(long e) const;      // 10^e at working precision
    HPReal eps(int offset) const;    // 10^(offset - digits)

private:
    int digits_;
    int guard_;
    mpfr_prec_t bits_;
    HPReal pi_;
    HPReal ln2_;
};

} // namespace mahler
