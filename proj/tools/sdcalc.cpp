// sdcalc: exact tables and identity verification for the calculus of
// simplicial d-polytopic numbers. Emits deterministic table/CSV/JSON output;
// exit codes: 0 success / all pass, 1 verification failure, 2 usage error.

#include "sdcalc/bernoulli.hpp"
#include "sdcalc/combinatorics.hpp"
#include "sdcalc/polynomial.hpp"
#include "sdcalc/series.hpp"
#include "sdcalc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using sdcalc::Rational;

using Record = std::vector<std::pair<std::string, std::string>>;
using Params = std::vector<std::pair<std::string, std::string>>;

struct IntRange {
    long lo = 0;
    long hi = 0;
};

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) {
            throw std::domain_error("range '" + text + "' is empty");
        }
        return {lo, hi};
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("malformed integer or range '" + text + "'");
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_table(const std::vector<Record>& records, std::ostream& os) {
    if (records.empty()) return;
    std::vector<std::string> headers;
    for (const auto& [key, _] : records.front()) headers.push_back(key);
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) widths[i] = headers[i].size();
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < rec.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], rec[i].second.size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) os << "  ";
            os << cells[i];
            if (i + 1 < cells.size()) {
                os << std::string(widths[i] - cells[i].size(), ' ');
            }
        }
        os << '\n';
    };
    line(headers);
    for (const auto& rec : records) {
        std::vector<std::string> cells;
        for (const auto& [_, value] : rec) cells.push_back(value);
        line(cells);
    }
}

void render_csv(const std::vector<Record>& records, std::ostream& os) {
    if (records.empty()) return;
    bool first = true;
    for (const auto& [key, _] : records.front()) {
        if (!first) os << ',';
        os << csv_escape(key);
        first = false;
    }
    os << '\n';
    for (const auto& rec : records) {
        first = true;
        for (const auto& [_, value] : rec) {
            if (!first) os << ',';
            os << csv_escape(value);
            first = false;
        }
        os << '\n';
    }
}

void render_json(const std::string& command, const Params& params,
                 const std::vector<Record>& records, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) doc["params"][key] = value;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [key, value] : rec) {
            if (key == "coefficients") {
                // keep the exact coefficient list structured in JSON
                auto arr = nlohmann::ordered_json::array();
                std::size_t start = 0;
                while (start <= value.size() && !value.empty()) {
                    const auto comma = value.find(',', start);
                    arr.push_back(value.substr(
                        start, comma == std::string::npos ? std::string::npos : comma - start));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
                obj[key] = std::move(arr);
            } else {
                obj[key] = value;
            }
        }
        doc["records"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

void render(const std::string& format, const std::string& command, const Params& params,
            const std::vector<Record>& records, std::ostream& os) {
    if (format == "csv") {
        render_csv(records, os);
    } else if (format == "json") {
        render_json(command, params, records, os);
    } else {
        render_table(records, os);
    }
}

struct CommonFlags {
    std::string d_text = "1";
    std::string format = "table";
};

int run_numbers(const CommonFlags& common, long n_max) {
    const IntRange d_range = parse_range(common.d_text);
    std::vector<Record> records;
    for (long d = d_range.lo; d <= d_range.hi; ++d) {
        for (long n = 0; n <= n_max; ++n) {
            records.push_back({{"d", std::to_string(d)},
                               {"n", std::to_string(n)},
                               {"value", sdcalc::sd_number(static_cast<int>(d), n).get_str()}});
        }
    }
    render(common.format, "numbers",
           {{"d", common.d_text}, {"n_max", std::to_string(n_max)}}, records, std::cout);
    return 0;
}

int run_binomials(const CommonFlags& common, long n) {
    const IntRange d_range = parse_range(common.d_text);
    std::vector<Record> records;
    for (long d = d_range.lo; d <= d_range.hi; ++d) {
        for (long k = 0; k <= n; ++k) {
            records.push_back(
                {{"d", std::to_string(d)},
                 {"n", std::to_string(n)},
                 {"k", std::to_string(k)},
                 {"value", sdcalc::hoggatt_binomial(static_cast<int>(d), n, k).str()}});
        }
    }
    render(common.format, "binomials", {{"d", common.d_text}, {"n", std::to_string(n)}},
           records, std::cout);
    return 0;
}

int run_bernoulli(const CommonFlags& common, long m, long n_max, bool poly) {
    const IntRange d_range = parse_range(common.d_text);
    std::vector<Record> records;
    for (long d = d_range.lo; d <= d_range.hi; ++d) {
        if (poly) {
            const auto family =
                sdcalc::bernoulli_polynomials(static_cast<int>(d), m, n_max);
            for (long n = 0; n <= n_max; ++n) {
                std::string joined;
                const auto& p = family.at(n);
                for (long i = 0; i <= n; ++i) {
                    if (i > 0) joined += ',';
                    joined += p.coefficient(i).str();
                }
                records.push_back({{"d", std::to_string(d)},
                                   {"m", std::to_string(m)},
                                   {"n", std::to_string(n)},
                                   {"coefficients", std::move(joined)}});
            }
        } else {
            const auto table = sdcalc::bernoulli_numbers_series(static_cast<int>(d), m, n_max);
            for (long n = 0; n <= n_max; ++n) {
                records.push_back({{"d", std::to_string(d)},
                                   {"m", std::to_string(m)},
                                   {"n", std::to_string(n)},
                                   {"value", table.value(n).str()}});
            }
        }
    }
    render(common.format, "bernoulli",
           {{"d", common.d_text},
            {"m", std::to_string(m)},
            {"n_max", std::to_string(n_max)},
            {"poly", poly ? "true" : "false"}},
           records, std::cout);
    return 0;
}

int run_verify(const CommonFlags& common, const std::string& identity, bool audit_only,
               bool strict_paper, const std::optional<long>& m,
               const std::optional<long>& n_max, bool d_given) {
    sdcalc::VerifyOptions options;
    if (d_given) {
        const IntRange d_range = parse_range(common.d_text);
        options.d_min = static_cast<int>(d_range.lo);
        options.d_max = static_cast<int>(d_range.hi);
    }
    if (m.has_value()) {
        options.m_min = *m;
        options.m_max = *m;
    }
    if (n_max.has_value()) {
        options.n_max = *n_max;
    }

    std::vector<sdcalc::IdentityReport> reports;
    if (audit_only) {
        reports = sdcalc::audit_paper_tables();
    } else if (identity == "all") {
        reports = sdcalc::verify_all(options);
    } else {
        reports = sdcalc::verify_identity(identity, options);
    }

    bool failed = false;
    std::vector<Record> records;
    for (const auto& r : reports) {
        if (!r.pass && (!r.audit || strict_paper)) {
            failed = true;
        }
        const std::string status =
            r.audit ? (r.pass ? "match" : "mismatch") : (r.pass ? "pass" : "fail");
        records.push_back({{"identity", r.identity},
                           {"d", std::to_string(r.d)},
                           {"m", r.m < 0 ? "" : std::to_string(r.m)},
                           {"n", r.n < 0 ? "" : std::to_string(r.n)},
                           {"status", status},
                           {"detail", r.detail}});
    }
    Params params{{"identity", audit_only ? "audit-tables" : identity},
                  {"strict_paper", strict_paper ? "true" : "false"}};
    if (d_given) params.push_back({"d", common.d_text});
    if (m.has_value()) params.push_back({"m", std::to_string(*m)});
    if (n_max.has_value()) params.push_back({"n_max", std::to_string(*n_max)});
    render(common.format, "verify", params, records, std::cout);
    return failed ? 1 : 0;
}

int run_exp(const CommonFlags& common, const std::string& x_text, long terms,
            const std::optional<int>& decimal_digits) {
    const IntRange d_range = parse_range(common.d_text);
    if (d_range.lo != d_range.hi) {
        throw std::domain_error("exp takes a single dimension, not a range");
    }
    const Rational x = Rational::parse(x_text);
    const sdcalc::Polynomial partial_sum =
        sdcalc::exp_d_partial_sum(static_cast<int>(d_range.lo), terms);
    const Rational value = partial_sum.evaluate(x);

    Record record{{"d", std::to_string(d_range.lo)},
                  {"x", x.str()},
                  {"terms", std::to_string(terms)},
                  {"value", value.str()}};
    Params params{{"d", common.d_text}, {"x", x_text}, {"terms", std::to_string(terms)}};
    if (decimal_digits.has_value()) {
        record.push_back({"decimal", value.decimal(*decimal_digits)});
        params.push_back({"decimal", std::to_string(*decimal_digits)});
    }
    render(common.format, "exp", params, {record}, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of simplicial d-polytopic numbers"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonFlags common;
    const auto add_common = [&common](CLI::App* cmd) {
        cmd->add_option("--d", common.d_text, "dimension (integer or range a..b)");
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    auto* numbers = app.add_subcommand("numbers", "emit simplicial d-polytopic numbers");
    long numbers_n_max = 10;
    add_common(numbers);
    numbers->add_option("--n-max", numbers_n_max, "largest index")->check(CLI::NonNegativeNumber);

    auto* binomials = app.add_subcommand("binomials", "emit a row of d-Hoggatt binomials");
    long binomials_n = 0;
    add_common(binomials);
    binomials->add_option("--n", binomials_n, "row index")->check(CLI::NonNegativeNumber);

    auto* bernoulli = app.add_subcommand("bernoulli", "emit S_d-Bernoulli numbers or polynomials");
    long bernoulli_m = 1;
    long bernoulli_n_max = 10;
    bool bernoulli_poly = false;
    add_common(bernoulli);
    bernoulli->add_option("--m", bernoulli_m, "hypergeometric order (1 = plain)");
    bernoulli->add_option("--n-max", bernoulli_n_max, "largest index")->check(CLI::NonNegativeNumber);
    bernoulli->add_flag("--poly", bernoulli_poly, "emit polynomial coefficient rows");

    auto* verify = app.add_subcommand("verify", "verify identities and audit the published tables");
    std::string verify_identity_name = "all";
    bool verify_all_flag = false;
    bool verify_audit = false;
    bool verify_strict = false;
    std::optional<long> verify_m;
    std::optional<long> verify_n_max;
    add_common(verify);
    verify->add_option("--identity", verify_identity_name, "identity name or 'all'");
    verify->add_flag("--all", verify_all_flag, "run every registered identity");
    verify->add_flag("--audit-tables", verify_audit, "audit the published Bernoulli tables only");
    verify->add_flag("--strict-paper", verify_strict, "audit mismatches fail the run");
    verify->add_option("--m", verify_m, "restrict the hypergeometric order");
    verify->add_option("--n-max", verify_n_max, "cap the index range");

    auto* exp = app.add_subcommand("exp", "evaluate a partial sum of the S_d-exponential");
    std::string exp_x = "0";
    long exp_terms = 1;
    std::optional<int> exp_decimal;
    add_common(exp);
    exp->add_option("--x", exp_x, "evaluation point as p/q");
    exp->add_option("--terms", exp_terms, "partial-sum degree")->check(CLI::PositiveNumber);
    exp->add_option("--decimal", exp_decimal, "also print a truncated decimal with this many digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (numbers->parsed()) {
            return run_numbers(common, numbers_n_max);
        }
        if (binomials->parsed()) {
            return run_binomials(common, binomials_n);
        }
        if (bernoulli->parsed()) {
            return run_bernoulli(common, bernoulli_m, bernoulli_n_max, bernoulli_poly);
        }
        if (verify->parsed()) {
            if (verify_all_flag) verify_identity_name = "all";
            if (verify_identity_name != "all" && !verify_audit &&
                !sdcalc::is_identity_name(verify_identity_name)) {
                throw std::domain_error("unknown identity '" + verify_identity_name + "'");
            }
            return run_verify(common, verify_identity_name, verify_audit, verify_strict,
                              verify_m, verify_n_max, verify->count("--d") > 0);
        }
        if (exp->parsed()) {
            return run_exp(common, exp_x, exp_terms, exp_decimal);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
