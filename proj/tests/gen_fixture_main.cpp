// Regenerates the committed coefficient fixture: a_0..a_1001 at 50 significant
// digits from the brute-force oracle. Run from the repository root:
//   g++ -std=c++20 -O2 tests/oracles.cpp tests/gen_fixture_main.cpp -lmpfr -lgmp -o gen_fixture
//   ./gen_fixture tests/fixtures/coeffs_50digit.csv
// The oracle is cross-checked against the MPFR zeta implementation before
// anything is written.
#include <cstdio>
#include <cstdlib>

#include <mpfr.h>

#include "oracles.hpp"

namespace {

constexpr mpfr_prec_t kPrec = 240; // ~72 decimal digits of working room
constexpr long kMaxK = 1001;
constexpr int kSig = 50;

// |oracle eta(k) - eta from mpfr_zeta_ui| must sit far below the fixture's
// own 50-digit resolution, or the oracle cannot be trusted to pin anything
bool eta_cross_check(long k) {
    mpfr_t mine, ref, d;
    mpfr_inits2(kPrec, mine, ref, d, static_cast<mpfr_ptr>(nullptr));
    oracles::eta(mine, k, kPrec);
    mpfr_zeta_ui(ref, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_set_ui(d, 1u, MPFR_RNDN);
    mpfr_mul_2si(d, d, 1 - k, MPFR_RNDN);
    mpfr_ui_sub(d, 1u, d, MPFR_RNDN);
    mpfr_mul(ref, ref, d, MPFR_RNDN);
    mpfr_sub(d, mine, ref, MPFR_RNDN);
    mpfr_div(d, d, ref, MPFR_RNDN);
    mpfr_abs(d, d, MPFR_RNDN);
    const bool ok = mpfr_cmp_d(d, 1e-55) < 0;
    if (!ok) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.3Re", d);
        std::fprintf(stderr, "eta cross-check FAILED at k=%ld: relative gap %s\n", k, s);
        mpfr_free_str(s);
    }
    mpfr_clears(mine, ref, d, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    const char* out = argc > 1 ? argv[1] : "tests/fixtures/coeffs_50digit.csv";

    for (long k : {2L, 3L, 4L, 5L, 10L, 60L, 101L, 200L, 500L, 1002L})
        if (!eta_cross_check(k)) return 1;

    std::vector<std::string> rows = oracles::coeff_strings(kMaxK, kSig, kPrec);
    try {
        oracles::write_fixture(out, rows);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
    std::printf("wrote %zu rows to %s\n", rows.size(), out);
    return 0;
}
