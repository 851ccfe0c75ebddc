#include "oracles.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oracles {

namespace {
constexpr long kDirectUpTo = 1000; // direct terms cover n < 1000
constexpr int kTailDepth = 64;
} // namespace

void alt_pow_sum(mpfr_t out, long start, long k, mpfr_prec_t prec) {
    if (k < 2 || start < 1) throw std::runtime_error("alt_pow_sum: bad arguments");

    mpfr_t s, t;
    mpfr_inits2(prec, s, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(s, 1);

    for (long n = start; n < kDirectUpTo; ++n) {
        mpfr_ui_pow_ui(t, static_cast<unsigned long>(n),
                       static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_ui_div(t, 1u, t, MPFR_RNDN);
        if ((n - start) % 2 == 0)
            mpfr_add(s, s, t, MPFR_RNDN);
        else
            mpfr_sub(s, s, t, MPFR_RNDN);
    }

    // tail sum_{n>=1000} (-1)^(n-start) n^-k: iterated averaging (Euler
    // transform) of the positive-lead tail, then the sign of its first term
    mpfr_t acc, pw;
    mpfr_inits2(prec, acc, pw, static_cast<mpfr_ptr>(nullptr));
    mpfr_t v[kTailDepth];
    for (int i = 0; i < kTailDepth; ++i) {
        mpfr_init2(v[i], prec);
        mpfr_ui_pow_ui(v[i], static_cast<unsigned long>(kDirectUpTo + i),
                       static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_ui_div(v[i], 1u, v[i], MPFR_RNDN);
    }
    mpfr_set_zero(acc, 1);
    mpfr_set_d(pw, 0.5, MPFR_RNDN);
    for (int j = 0; j < kTailDepth; ++j) {
        // acc += (forward difference of order j at n=1000) / 2^(j+1)
        mpfr_fma(acc, v[0], pw, acc, MPFR_RNDN);
        mpfr_div_2ui(pw, pw, 1, MPFR_RNDN);
        for (int i = 0; i + j + 1 < kTailDepth; ++i)
            mpfr_sub(v[i], v[i], v[i + 1], MPFR_RNDN);
    }
    if ((kDirectUpTo - start) % 2 == 0)
        mpfr_add(s, s, acc, MPFR_RNDN);
    else
        mpfr_sub(s, s, acc, MPFR_RNDN);

    mpfr_set(out, s, MPFR_RNDN);
    for (int i = 0; i < kTailDepth; ++i) mpfr_clear(v[i]);
    mpfr_clears(s, t, acc, pw, static_cast<mpfr_ptr>(nullptr));
}

void eta(mpfr_t out, long k, mpfr_prec_t prec) { alt_pow_sum(out, 1, k, prec); }

void eta_deficit(mpfr_t out, long k, mpfr_prec_t prec) { alt_pow_sum(out, 2, k, prec); }

void zeta(mpfr_t out, long k, mpfr_prec_t prec) {
    mpfr_t e, d;
    mpfr_inits2(prec, e, d, static_cast<mpfr_ptr>(nullptr));
    eta(e, k, prec);
    mpfr_set_ui(d, 1u, MPFR_RNDN);
    mpfr_mul_2si(d, d, 1 - k, MPFR_RNDN);
    mpfr_ui_sub(d, 1u, d, MPFR_RNDN);
    mpfr_div(out, e, d, MPFR_RNDN);
    mpfr_clears(e, d, static_cast<mpfr_ptr>(nullptr));
}

namespace {
// atan(1/m) = sum_j (-1)^j / ((2j+1) m^(2j+1))
void atan_inv(mpfr_t out, unsigned long m, mpfr_prec_t prec) {
    mpfr_t p, t;
    mpfr_inits2(prec, p, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(p, 1u, MPFR_RNDN);
    mpfr_div_ui(p, p, m, MPFR_RNDN); // m^-(2j+1)
    mpfr_set_zero(out, 1);
    for (long j = 0;; ++j) {
        mpfr_div_ui(t, p, static_cast<unsigned long>(2 * j + 1), MPFR_RNDN);
        if (j % 2 == 0)
            mpfr_add(out, out, t, MPFR_RNDN);
        else
            mpfr_sub(out, out, t, MPFR_RNDN);
        if (mpfr_zero_p(t) || mpfr_get_exp(t) < -(prec + 8)) break;
        mpfr_div_ui(p, p, m * m, MPFR_RNDN);
    }
    mpfr_clears(p, t, static_cast<mpfr_ptr>(nullptr));
}
} // namespace

void machin_pi(mpfr_t out, mpfr_prec_t prec) {
    mpfr_t a5, a239;
    mpfr_inits2(prec, a5, a239, static_cast<mpfr_ptr>(nullptr));
    atan_inv(a5, 5u, prec);
    atan_inv(a239, 239u, prec);
    mpfr_mul_ui(a5, a5, 16u, MPFR_RNDN);
    mpfr_mul_ui(a239, a239, 4u, MPFR_RNDN);
    mpfr_sub(out, a5, a239, MPFR_RNDN);
    mpfr_clears(a5, a239, static_cast<mpfr_ptr>(nullptr));
}

std::vector<std::string> coeff_strings(long K, int sig, mpfr_prec_t prec) {
    if (K < 2) throw std::runtime_error("coeff_strings: K must be >= 2");

    // eta(2..K) once; the recurrence reads eta(k-j) = |b_(k-1-j)|
    // (raw arrays: mpfr_t is an array type and cannot live in a std::vector)
    mpfr_t* et = new mpfr_t[static_cast<std::size_t>(K) + 1];
    for (long k = 2; k <= K; ++k) {
        mpfr_init2(et[k], prec);
        eta(et[k], k, prec);
    }

    mpfr_t* a = new mpfr_t[static_cast<std::size_t>(K) + 1];
    for (long k = 0; k <= K; ++k) mpfr_init2(a[k], prec);
    mpfr_set_ui(a[0], 1u, MPFR_RNDN);
    mpfr_set_zero(a[1], 1);

    // a_2 = zeta(2)/4 = eta(2)/2
    mpfr_div_2ui(a[2], et[2], 1, MPFR_RNDN);

    mpfr_t s, t;
    mpfr_inits2(prec, s, t, static_cast<mpfr_ptr>(nullptr));
    for (long k = 3; k <= K; ++k) {
        mpfr_set_zero(s, 1);
        for (long j = 0; j <= k - 2; ++j) {
            // b_(k-1-j) = (-1)^(k-j) eta(k-j)
            mpfr_mul(t, a[j], et[k - j], MPFR_RNDN);
            if ((k - j) % 2 == 0)
                mpfr_add(s, s, t, MPFR_RNDN);
            else
                mpfr_sub(s, s, t, MPFR_RNDN);
        }
        mpfr_div_ui(a[k], s, static_cast<unsigned long>(k), MPFR_RNDN);
    }
    mpfr_clears(s, t, static_cast<mpfr_ptr>(nullptr));

    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        char* str = nullptr;
        mpfr_asprintf(&str, "%.*Re", sig - 1, a[k]);
        rows.emplace_back(str);
        mpfr_free_str(str);
    }

    for (long k = 2; k <= K; ++k) mpfr_clear(et[k]);
    for (long k = 0; k <= K; ++k) mpfr_clear(a[k]);
    delete[] et;
    delete[] a;
    return rows;
}

void write_fixture(const std::string& path, const std::vector<std::string>& values) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_fixture: cannot open " + path);
    out << "k,a_k\n";
    for (std::size_t k = 0; k < values.size(); ++k) out << k << "," << values[k] << "\n";
    if (!out) throw std::runtime_error("write_fixture: write failed for " + path);
}

std::vector<std::string> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_fixture: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "k,a_k")
        throw std::runtime_error("load_fixture: bad header in " + path);
    std::vector<std::string> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("load_fixture: bad row: " + line);
        const long k = std::stol(line.substr(0, comma));
        if (k != static_cast<long>(values.size()))
            throw std::runtime_error("load_fixture: non-contiguous k in " + path);
        values.push_back(line.substr(comma + 1));
    }
    if (values.size() < 3) throw std::runtime_error("load_fixture: too few rows");
    return values;
}

} // namespace oracles
