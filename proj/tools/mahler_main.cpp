// Command-line front end: `coeffs` serializes the coefficient table, `verify`
// runs the full claim suite, `quad` integrates one moment directly, and
// `zeta-mahler` integrates |x - r|^s over the circle. Every flag can also be
// supplied through an environment variable with the MAHLER_ prefix.
#include <string>

#include <CLI11.hpp>

#include "mahler/report.hpp"

namespace {

void add_precision_flags(CLI::App* sub, mahler::RunConfig& cfg) {
    sub->add_option("--digits", cfg.digits, "requested decimal digits (>= 15)")
        ->envname("MAHLER_DIGITS");
    sub->add_option("--guard-digits", cfg.guard_digits,
                    "extra working digits (>= 10)")
        ->envname("MAHLER_GUARD_DIGITS");
}

void add_output_flags(CLI::App* sub, mahler::RunConfig& cfg, std::string& fmt) {
    sub->add_option("--format", fmt, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("MAHLER_FORMAT");
    sub->add_option("--out", cfg.out, "output file (default: stdout)")
        ->envname("MAHLER_OUT");
}

CLI::Option* add_tol_flag(CLI::App* sub, mahler::RunConfig& cfg) {
    return sub->add_option("--tol", cfg.tol, "absolute quadrature tolerance")
        ->envname("MAHLER_TOL");
}

} // namespace

int main(int argc, char** argv) {
    mahler::RunConfig cfg;
    std::string fmt = "csv";

    CLI::App app{"higher Mahler measures of x - r on the unit circle: "
                 "coefficient tables, claim verification, direct quadrature"};
    app.require_subcommand(1);

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "write the table of a_k, m_k and derived columns");
    coeffs->add_option("--max-k", cfg.max_k, "table size K (>= 2)")
        ->envname("MAHLER_MAX_K");
    add_precision_flags(coeffs, cfg);
    add_output_flags(coeffs, cfg, fmt);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every claim check and write the report");
    verify->add_option("--max-k", cfg.max_k, "table size K (>= 2)")
        ->envname("MAHLER_MAX_K");
    add_precision_flags(verify, cfg);
    CLI::Option* vtol = add_tol_flag(verify, cfg);
    add_output_flags(verify, cfg, fmt);

    CLI::App* quad = app.add_subcommand(
        "quad", "integrate log^k |x - r| over the circle directly");
    quad->add_option("--k", cfg.k, "moment order (>= 0)")->envname("MAHLER_K");
    quad->add_option("--angle", cfg.angle, "r = e^(2 pi i angle)")
        ->envname("MAHLER_ANGLE");
    add_precision_flags(quad, cfg);
    add_tol_flag(quad, cfg);
    add_output_flags(quad, cfg, fmt);

    CLI::App* zm = app.add_subcommand(
        "zeta-mahler", "integrate |x - r|^s over the circle (s > -1)");
    zm->add_option("--s", cfg.s, "exponent s > -1")->envname("MAHLER_S");
    zm->add_option("--angle", cfg.angle, "r = e^(2 pi i angle)")
        ->envname("MAHLER_ANGLE");
    add_precision_flags(zm, cfg);
    add_tol_flag(zm, cfg);
    add_output_flags(zm, cfg, fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // every malformed invocation is a usage error
    }

    cfg.format = (fmt == "json") ? mahler::OutputFormat::json
                                 : mahler::OutputFormat::csv;
    cfg.tol_set = vtol->count() > 0;

    if (*coeffs) return mahler::cmd_coeffs(cfg);
    if (*verify) return mahler::cmd_verify(cfg);
    if (*quad) return mahler::cmd_quad(cfg);
    return mahler::cmd_zeta_mahler(cfg);
}
