#include "mahler/report.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <cstdio>


namespace mahler {

namespace {

std::string sci_or_nan(const HPReal& x, int digits) {
    return x.finite() ? x.sci(digits) : std::string("nan");
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 8);
    for (unsigned char ch : text) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    return out;
}

std::string json_str(const std::string& text) { return "\"" + json_escape(text) + "\""; }

// "value" quoted as a JSON string, or null when the cell is absent
std::string json_num_cell(const HPReal* x, int digits) {
    if (x == nullptr) return "null";
    return json_str(sci_or_nan(*x, digits));
}

// runs `body` with the configured output stream and converts stream trouble
// into IoError
void with_output(const RunConfig& config, const std::function<void(std::ostream&)>& body) {
    if (config.out.empty()) {
        body(std::cout);
        std::cout.flush();
        if (!std::cout.good()) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream os(config.out);
    if (!os.good()) throw IoError("cannot open output file: " + config.out);
    body(os);
    os.flush();
    if (!os.good()) throw IoError("write failed: " + config.out);
}

} // namespace

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}

void write_table_csv(std::ostream& os, const CoefficientTable& table, int digits) {
    const PrecisionContext& ctx = table.ctx();
    const int K = table.max_k();
    os << "k,a_k,m_k,abs_a_k,k_gap,ratio,B_k\n";
    for (int k = 0; k <= K; ++k) {
        os << k << ',' << table.a(k).sci(digits) << ',' << table.m(k).sci(digits)
           << ',' << table.a(k).abs().sci(digits) << ',';
        if (k < K)
            os << (ctx.from_long(k) * (table.a(k + 1) + table.a(k)).abs()).sci(digits);
        os << ',';
        if (k >= 2 && k < K) os << (table.a(k + 1) / table.a(k)).sci(digits);
        os << ',';
        if (k >= 1 && k < K) os << table.B(k).sci(digits);
        os << '\n';
    }
}

void write_table_json(std::ostream& os, const CoefficientTable& table, int digits) {
    const PrecisionContext& ctx = table.ctx();
    const int K = table.max_k();
    os << "{\n  \"digits\": " << digits << ",\n  \"max_k\": " << K
       << ",\n  \"rows\": [\n";
    for (int k = 0; k <= K; ++k) {
        HPReal abs_a = table.a(k).abs();
        HPReal gap;
        const HPReal* gap_p = nullptr;
        if (k < K) {
            gap = ctx.from_long(k) * (table.a(k + 1) + table.a(k)).abs();
            gap_p = &gap;
        }
        HPReal ratio;
        const HPReal* ratio_p = nullptr;
        if (k >= 2 && k < K) {
            ratio = table.a(k + 1) / table.a(k);
            ratio_p = &ratio;
        }
        const HPReal* b_p = (k >= 1 && k < K) ? &table.B(k) : nullptr;
        os << "    {\"k\": " << k << ", \"a_k\": " << json_num_cell(&table.a(k), digits)
           << ", \"m_k\": " << json_num_cell(&table.m(k), digits)
           << ", \"abs_a_k\": " << json_num_cell(&abs_a, digits)
           << ", \"k_gap\": " << json_num_cell(gap_p, digits)
           << ", \"ratio\": " << json_num_cell(ratio_p, digits)
           << ", \"B_k\": " << json_num_cell(b_p, digits) << "}"
           << (k < K ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
}

void write_report_csv(std::ostream& os, const VerificationReport& rep, int digits) {
    os << "# digits=" << rep.digits << " guard_digits=" << rep.guard_digits
       << " max_k=" << rep.max_k << " overall_pass="
       << (rep.overall_pass ? "true" : "false") << '\n';
    os << "claim_id,statement,observed,bound_or_target,tolerance,pass,detail\n";
    for (const ClaimCheck& c : rep.checks) {
        os << csv_field(c.claim_id) << ',' << csv_field(c.statement) << ','
           << sci_or_nan(c.observed, digits) << ','
           << sci_or_nan(c.bound_or_target, digits) << ','
           << sci_or_nan(c.tolerance, digits) << ',' << (c.pass ? "true" : "false")
           << ',' << csv_field(c.detail) << '\n';
    }
}

void write_report_json(std::ostream& os, const VerificationReport& rep, int digits) {
    os << "{\n  \"digits\": " << rep.digits << ",\n  \"guard_digits\": "
       << rep.guard_digits << ",\n  \"max_k\": " << rep.max_k
       << ",\n  \"overall_pass\": " << (rep.overall_pass ? "true" : "false")
       << ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const ClaimCheck& c = rep.checks[i];
        os << "    {\n      \"claim_id\": " << json_str(c.claim_id)
           << ",\n      \"statement\": " << json_str(c.statement)
           << ",\n      \"observed\": " << json_str(sci_or_nan(c.observed, digits))
           << ",\n      \"bound_or_target\": "
           << json_str(sci_or_nan(c.bound_or_target, digits))
           << ",\n      \"tolerance\": " << json_str(sci_or_nan(c.tolerance, digits))
           << ",\n      \"pass\": " << (c.pass ? "true" : "false")
           << ",\n      \"detail\": " << json_str(c.detail) << "\n    }"
           << (i + 1 < rep.checks.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
}

void write_quad_csv(std::ostream& os, const QuadratureResult& q, int digits) {
    os << "value,error_estimate,levels,nodes\n";
    os << sci_or_nan(q.value, digits) << ',' << sci_or_nan(q.error_estimate, digits)
       << ',' << q.levels << ',' << q.nodes << '\n';
}

void write_quad_json(std::ostream& os, const QuadratureResult& q, int digits) {
    os << "{\n  \"value\": " << json_str(sci_or_nan(q.value, digits))
       << ",\n  \"error_estimate\": " << json_str(sci_or_nan(q.error_estimate, digits))
       << ",\n  \"levels\": " << q.levels << ",\n  \"nodes\": " << q.nodes << "\n}\n";
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const IoError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const UsageError*>(&e) != nullptr ||
        dynamic_cast<const DomainError*>(&e) != nullptr ||
        dynamic_cast<const RangeError*>(&e) != nullptr ||
        dynamic_cast<const ResourceError*>(&e) != nullptr)
        return 2;
    return 1; // IntegrityError, ConvergenceError, IntegrandError, plain Error
}

namespace {

int run_command(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int cmd_coeffs(const RunConfig& config) {
    return run_command([&] {
        PrecisionContext ctx(config.digits, config.guard_digits);
        CoefficientTable table = build_table(config.max_k, ctx);
        with_output(config, [&](std::ostream& os) {
            if (config.format == OutputFormat::csv)
                write_table_csv(os, table, config.digits);
            else
                write_table_json(os, table, config.digits);
        });
        return 0;
    });
}

int cmd_verify(const RunConfig& config) {
    return run_command([&] {
        PrecisionContext ctx(config.digits, config.guard_digits);
        Schedules schedules = Schedules::defaults(config.max_k, ctx);
        if (config.tol_set) {
            HPReal tol = ctx.parse(config.tol);
            if (tol.is_nan() || !tol.finite() || tol.sign() <= 0)
                throw UsageError("--tol must be a positive number");
            schedules.quad_tol = tol;
        }
        VerificationReport rep = run_all(config.max_k, ctx, schedules);
        with_output(config, [&](std::ostream& os) {
            if (config.format == OutputFormat::csv)
                write_report_csv(os, rep, config.digits);
            else
                write_report_json(os, rep, config.digits);
        });
        return rep.overall_pass ? 0 : 1;
    });
}

int cmd_quad(const RunConfig& config) {
    return run_command([&] {
        PrecisionContext ctx(config.digits, config.guard_digits);
        HPReal tol = ctx.parse(config.tol);
        UnitCirclePoint r(ctx.parse(config.angle));
        QuadratureResult q =
            mahler_integral(config.k, r, tol, ctx, config.quad_max_level);
        with_output(config, [&](std::ostream& os) {
            if (config.format == OutputFormat::csv)
                write_quad_csv(os, q, config.digits);
            else
                write_quad_json(os, q, config.digits);
        });
        return 0;
    });
}

int cmd_zeta_mahler(const RunConfig& config) {
    return run_command([&] {
        if (config.s.empty())
            throw UsageError("zeta-mahler needs --s (the exponent, must be > -1)");
        PrecisionContext ctx(config.digits, config.guard_digits);
        HPReal tol = ctx.parse(config.tol);
        UnitCirclePoint r(ctx.parse(config.angle));
        QuadratureResult q =
            zeta_mahler_integral(ctx.parse(config.s), r, tol, ctx, config.quad_max_level);
        with_output(config, [&](std::ostream& os) {
            if (config.format == OutputFormat::csv)
                write_quad_csv(os, q, config.digits);
            else
                write_quad_json(os, q, config.digits);
        });
        return 0;
    });
}

} // namespace mahler
