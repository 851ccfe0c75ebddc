// Brute-force reference implementations used only by tests and the fixture
// generator. Raw MPFR on purpose: these share no code with the library, so an
// agreement between the two is evidence, not tautology.
#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

namespace oracles {

// sum_{n>=start} (-1)^(n-start) n^-k (leading term positive):
// direct summation up to n=999 plus a 64-step iterated-averaging tail.
// Relative error is below 1e-60 for every k >= 2 at prec >= 220 bits.
void alt_pow_sum(mpfr_t out, long start, long k, mpfr_prec_t prec);

// eta(k) = sum (-1)^(n+1) n^-k, k >= 2
void eta(mpfr_t out, long k, mpfr_prec_t prec);

// 1 - eta(k) summed directly so tiny values keep full relative accuracy
void eta_deficit(mpfr_t out, long k, mpfr_prec_t prec);

// zeta(k) = eta(k)/(1 - 2^(1-k)), k >= 2
void zeta(mpfr_t out, long k, mpfr_prec_t prec);

// pi from Machin's formula with the two arctangents summed term by term
void machin_pi(mpfr_t out, mpfr_prec_t prec);

// a_0..a_K of the moment-coefficient recurrence
//   a_0 = 1, a_1 = 0, a_2 = zeta(2)/4,
//   a_k = (1/k) sum_{j=0}^{k-2} a_j (-1)^(k-j) eta(k-j)   for k >= 3,
// built with plain multiply/add on the brute-force eta values and formatted
// with `sig` significant digits
std::vector<std::string> coeff_strings(long K, int sig, mpfr_prec_t prec);

// fixture CSV: header "k,a_k", then one "k,value" row per k starting at 0
void write_fixture(const std::string& path, const std::vector<std::string>& values);
// returns values indexed by k; throws std::runtime_error on malformed content
std::vector<std::string> load_fixture(const std::string& path);

} // namespace oracles
