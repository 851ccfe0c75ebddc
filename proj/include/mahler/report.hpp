// Serialization and command drivers behind the CLI: coefficient tables,
// verification reports and quadrature results rendered as CSV or JSON, plus
// the mapping from thrown errors to process exit codes.
#pragma once

#include <iosfwd>
#include <string>

#include "mahler/coefficients.hpp"
#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"
#include "mahler/verify.hpp"

namespace mahler {

enum class OutputFormat { csv, json };

// everything a command needs, with the documented defaults. Numeric-valued
// settings that must survive exactly (tolerance, angle, s) travel as decimal
// strings and are parsed at the target precision.
struct RunConfig {
    int digits = 30;
    int guard_digits = 10;
    int max_k = 1000;
    int k = 0;                  // moment order for `quad`
    int quad_max_level = kDefaultMaxLevel;
    std::string tol = "1e-12";  // absolute quadrature tolerance
    bool tol_set = false;       // true when the user supplied --tol
    std::string angle = "0";    // circle point e^(2 pi i angle)
    std::string s;              // exponent for `zeta-mahler`
    OutputFormat format = OutputFormat::csv;
    std::string out;            // output path; empty writes to stdout
};

// RFC 4180 field quoting: wraps the text in double quotes when it contains a
// comma, quote or line break, doubling interior quotes
std::string csv_field(const std::string& text);

// numbers are rendered in scientific notation with exactly `digits`
// significant figures; absent cells are empty in CSV and null in JSON.
// Column order: k, a_k, m_k, abs_a_k, k_gap (= k*|a_{k+1}+a_k|, absent at
// k = max_k), ratio (= a_{k+1}/a_k, absent for k <= 1 and k = max_k), B_k
// (absent at k = 0 and k = max_k).
void write_table_csv(std::ostream& os, const CoefficientTable& table, int digits);
void write_table_json(std::ostream& os, const CoefficientTable& table, int digits);

// report rows carry claim_id, statement, observed, bound_or_target,
// tolerance, pass, detail; the CSV opens with one `#` comment line holding
// the run context, the JSON nests the same fields at top level
void write_report_csv(std::ostream& os, const VerificationReport& rep, int digits);
void write_report_json(std::ostream& os, const VerificationReport& rep, int digits);

// a single quadrature outcome: value, error_estimate, levels, nodes
void write_quad_csv(std::ostream& os, const QuadratureResult& q, int digits);
void write_quad_json(std::ostream& os, const QuadratureResult& q, int digits);

// 2 for domain/range/usage/resource errors, 3 for I/O, 1 for anything that
// means a computation or verification failed
int exit_code_for(const Error& e);

// command drivers; each validates its config, runs, writes to config.out or
// stdout, reports errors on stderr, and returns the process exit code
int cmd_coeffs(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_quad(const RunConfig& config);
int cmd_zeta_mahler(const RunConfig& config);

} // namespace mahler
