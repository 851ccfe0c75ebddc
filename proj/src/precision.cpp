#include "mahler/precision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mahler {

/* ---------------- HPReal ---------------- */

HPReal::HPReal() {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_nan(v_);
}

HPReal::HPReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(const HPReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_)); // drops the old value
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::of_long(long v, mpfr_prec_t bits) {
    HPReal r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::of_double(double v, mpfr_prec_t bits) {
    HPReal r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

HPReal HPReal::parse(std::string_view text, mpfr_prec_t bits) {
    std::string s(text);
    // trim ASCII whitespace on both ends; mpfr_strtofr skips leading space
    // anyway but we want "1.5 " accepted and "1.5x" rejected
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    if (b == std::string::npos) throw UsageError("parse: empty numeric string");
    s = s.substr(b, e - b + 1);

    HPReal r(bits);
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end != s.c_str() + s.size())
        throw UsageError("parse: not a valid decimal number: '" + s + "'");
    return r;
}

HPReal HPReal::of_raw(mpfr_srcptr v, mpfr_prec_t bits) {
    HPReal r(bits);
    mpfr_set(r.v_, v, MPFR_RNDN);
    return r;
}

mpfr_prec_t HPReal::bits() const { return mpfr_get_prec(v_); }
bool HPReal::finite() const { return mpfr_number_p(v_) != 0; }
bool HPReal::is_nan() const { return mpfr_nan_p(v_) != 0; }
bool HPReal::is_zero() const { return mpfr_zero_p(v_) != 0; }

int HPReal::sign() const {
    if (is_nan()) throw DomainError("sign: NaN has no sign");
    if (mpfr_zero_p(v_)) return 0;
    return mpfr_signbit(v_) ? -1 : 1;
}

double HPReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HPReal::sci(int significant) const {
    if (significant < 1) throw UsageError("sci: need at least one digit");
    char* out = nullptr;
    if (mpfr_asprintf(&out, "%.*Re", significant - 1, v_) < 0)
        throw Error("sci: formatting failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

HPReal HPReal::abs() const {
    HPReal r(bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::round_to(mpfr_prec_t bits) const {
    HPReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

void HPReal::add_mul(const HPReal& x, const HPReal& y) {
    mpfr_fma(v_, x.v_, y.v_, v_, MPFR_RNDN);
}

void HPReal::sub_mul(const HPReal& x, const HPReal& y) {
    mpfr_fms(v_, x.v_, y.v_, v_, MPFR_RNDN);
    mpfr_neg(v_, v_, MPFR_RNDN); // fms gives x*y - this
}

namespace {
mpfr_prec_t wider(const HPReal& x, const HPReal& y) {
    return std::max(x.bits(), y.bits());
}
} // namespace

HPReal& HPReal::operator+=(const HPReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
HPReal& HPReal::operator-=(const HPReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
HPReal& HPReal::operator*=(const HPReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
HPReal& HPReal::operator/=(const HPReal& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal operator+(const HPReal& x, const HPReal& y) {
    HPReal r(wider(x, y));
    mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}
HPReal operator-(const HPReal& x, const HPReal& y) {
    HPReal r(wider(x, y));
    mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}
HPReal operator*(const HPReal& x, const HPReal& y) {
    HPReal r(wider(x, y));
    mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}
HPReal operator/(const HPReal& x, const HPReal& y) {
    HPReal r(wider(x, y));
    mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}
HPReal operator-(const HPReal& x) {
    HPReal r(x.bits());
    mpfr_neg(r.v_, x.v_, MPFR_RNDN);
    return r;
}

bool operator<(const HPReal& x, const HPReal& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
bool operator<=(const HPReal& x, const HPReal& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
bool operator>(const HPReal& x, const HPReal& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
bool operator>=(const HPReal& x, const HPReal& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }
bool operator==(const HPReal& x, const HPReal& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }
bool operator!=(const HPReal& x, const HPReal& y) { return mpfr_equal_p(x.v_, y.v_) == 0; }

mpfr_srcptr HPReal::raw() const { return v_; }

#define MAHLER_UNARY(name, call, guard)                    \
    HPReal name(const HPReal& x) {                         \
        guard;                                             \
        HPReal r(x.bits());                                \
        call(r.v_, x.v_, MPFR_RNDN);                       \
        return r;                                          \
    }

MAHLER_UNARY(exp, mpfr_exp, )
MAHLER_UNARY(log, mpfr_log,
             if (!x.is_nan() && mpfr_sgn(x.v_) <= 0)
                 throw DomainError("log: argument must be positive"))
MAHLER_UNARY(sqrt, mpfr_sqrt,
             if (!x.is_nan() && mpfr_sgn(x.v_) < 0)
                 throw DomainError("sqrt: argument must be nonnegative"))
MAHLER_UNARY(sin, mpfr_sin, )
MAHLER_UNARY(cos, mpfr_cos, )
MAHLER_UNARY(sinh, mpfr_sinh, )
MAHLER_UNARY(cosh, mpfr_cosh, )
MAHLER_UNARY(tanh, mpfr_tanh, )

#undef MAHLER_UNARY

HPReal floor(const HPReal& x) {
    HPReal r(x.bits());
    mpfr_floor(r.v_, x.v_);
    return r;
}

HPReal pow(const HPReal& base, const HPReal& expo) {
    HPReal r(wider(base, expo));
    mpfr_pow(r.v_, base.v_, expo.v_, MPFR_RNDN);
    return r;
}

HPReal pow_si(const HPReal& base, long e) {
    HPReal r(base.bits());
    mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
    return r;
}

void sinh_cosh(const HPReal& x, HPReal& s, HPReal& c) {
    HPReal sr(x.bits()), cr(x.bits());
    mpfr_sinh_cosh(sr.v_, cr.v_, x.v_, MPFR_RNDN);
    s = std::move(sr);
    c = std::move(cr);
}

/* ---------------- PrecisionContext ---------------- */

namespace {
mpfr_prec_t bits_for(int working_digits) {
    // log2(10) rounded up at the 12th decimal, plus headroom for the final
    // rounding of each elementary operation
    return static_cast<mpfr_prec_t>(std::ceil(working_digits * 3.321928094888)) + 8;
}
} // namespace

PrecisionContext::PrecisionContext(int digits, int guard_digits)
    : digits_(digits),
      guard_(guard_digits),
      bits_(bits_for(digits + guard_digits)),
      pi_(bits_),
      ln2_(bits_) {
    if (digits < 15)
        throw DomainError("PrecisionContext: digits must be >= 15");
    if (guard_digits < 10)
        throw DomainError("PrecisionContext: guard_digits must be >= 10");
    mpfr_const_pi(pi_.v_, MPFR_RNDN);
    mpfr_const_log2(ln2_.v_, MPFR_RNDN);
}

HPReal PrecisionContext::zero() const { return HPReal(bits_); }

HPReal PrecisionContext::one() const { return HPReal::of_long(1, bits_); }

HPReal PrecisionContext::from_long(long v) const { return HPReal::of_long(v, bits_); }

HPReal PrecisionContext::from_double(double v) const { return HPReal::of_double(v, bits_); }

HPReal PrecisionContext::parse(std::string_view text) const {
    return HPReal::parse(text, bits_);
}

HPReal PrecisionContext::pow10(long e) const {
    HPReal r(bits_);
    mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.v_, 1u, r.v_, MPFR_RNDN);
    return r;
}

HPReal PrecisionContext::eps(int offset) const { return pow10(offset - digits_); }

} // namespace mahler
