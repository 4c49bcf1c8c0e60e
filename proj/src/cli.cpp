#include "hyperzeta/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/format.hpp"
#include "hyperzeta/oracle.hpp"
#include "hyperzeta/summation.hpp"
#include "hyperzeta/zeta_algebra.hpp"

namespace hyperzeta {

OutputRecord make_record(int r, int m, std::uint64_t oracle_terms) {
    OutputRecord rec;
    rec.r = r;
    rec.m = m;
    if (!convergent({r, m})) {
        rec.divergent = true;
        return rec;
    }
    SumReport report = oracle_report({r, m}, oracle_terms);
    rec.closed_zeta = report.closed_form.render(RenderStyle::zeta_only);
    rec.closed_pi = report.closed_form.render(RenderStyle::pi_power);
    rec.approx_value = report.closed_value;
    rec.oracle_value = report.oracle_value;
    rec.discrepancy = report.discrepancy;
    rec.terms_used = report.terms_used;
    return rec;
}

namespace {

struct RangeSpec {
    int lo = 0;
    int hi = 0;
};

// "3" or "3..10".
RangeSpec parse_range(const std::string& text) {
    RangeSpec range;
    std::size_t dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            std::string lo = text.substr(0, dots);
            std::string hi = text.substr(dots + 2);
            range.lo = std::stoi(lo, &used);
            if (used != lo.size()) throw std::invalid_argument(text);
            range.hi = std::stoi(hi, &used);
            if (used != hi.size()) throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or N..M, got '" + text + "'");
    }
    if (range.lo < 1 || range.hi < range.lo)
        throw CLI::ValidationError("range", "bounds must satisfy 1 <= lo <= hi: '" + text + "'");
    if (range.hi > 1000)
        throw CLI::ValidationError("range", "upper bound too large (max 1000): '" + text + "'");
    return range;
}

// Re-round a double to what the formatted string displays, so emitted JSON
// numbers survive a parse -> dump cycle bit-for-bit at the chosen precision.
double rounded_to_digits(double v, int digits) {
    return std::strtod(format_significant(v, digits).c_str(), nullptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int run_hh(std::uint64_t n, unsigned r, int digits, std::ostream& out) {
    Rational h = hyperharmonic(n, r);
    out << to_string(h);
    if (h.get_den() != 1)
        out << " ≈ " << format_significant(to_double(h), digits);
    out << "\n";
    return exit_ok;
}

int run_sum(int r, int m, bool exact_only, bool numeric_only,
            std::uint64_t oracle_terms, int digits, std::ostream& out) {
    ZetaExpr closed = sum_closed_form({r, m}); // throws if divergent
    double value = closed.eval();

    if (numeric_only) {
        out << format_significant(value, digits) << "\n";
    } else {
        std::string label = sum_name({r, m});
        std::string pad(label.size(), ' ');
        out << label << " = " << closed.render(RenderStyle::zeta_only) << "\n";
        out << pad << " = " << closed.render(RenderStyle::pi_power) << "\n";
        if (!exact_only)
            out << pad << " ≈ " << format_significant(value, digits) << "\n";
    }

    if (oracle_terms > 0) {
        double partial = direct_sum({r, m}, oracle_terms);
        double tail = tail_estimate({r, m}, oracle_terms);
        out << "partial sum (N=" << oracle_terms
            << ") = " << format_significant(partial, digits) << "\n";
        out << "tail estimate       = " << format_significant(tail, digits) << "\n";
        out << "oracle value        = " << format_significant(partial + tail, digits) << "\n";
        out << "discrepancy         = "
            << format_significant(std::abs(value - (partial + tail)), 3) << "\n";
    }
    return exit_ok;
}

int run_table(const RangeSpec& rr, const RangeSpec& mr, const std::string& format,
              std::uint64_t oracle_terms, int digits, std::ostream& out) {
    std::vector<OutputRecord> records;
    for (int r = rr.lo; r <= rr.hi; ++r)
        for (int m = mr.lo; m <= mr.hi; ++m)
            records.push_back(make_record(r, m, oracle_terms));

    auto fmt = [digits](double v) { return format_significant(v, digits); };

    if (format == "csv") {
        out << "r,m,closed_form,approx_value,oracle_value,discrepancy\n";
        for (const auto& rec : records) {
            out << rec.r << "," << rec.m << ",";
            if (rec.divergent) {
                out << "div,div,div,div\n";
            } else {
                out << csv_field(rec.closed_zeta) << "," << fmt(rec.approx_value) << ","
                    << fmt(rec.oracle_value) << "," << format_significant(rec.discrepancy, 3)
                    << "\n";
            }
        }
        return exit_ok;
    }

    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& rec : records) {
            nlohmann::ordered_json row;
            row["r"] = rec.r;
            row["m"] = rec.m;
            row["divergent"] = rec.divergent;
            if (!rec.divergent) {
                row["closed_form"] = rec.closed_zeta;
                row["closed_form_pi"] = rec.closed_pi;
                row["approx_value"] = rounded_to_digits(rec.approx_value, digits);
                row["oracle_value"] = rounded_to_digits(rec.oracle_value, digits);
                row["discrepancy"] = rounded_to_digits(rec.discrepancy, 3);
                row["oracle_terms"] = rec.terms_used;
            }
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
        return exit_ok;
    }

    // text: aligned columns, pi-power closed forms.
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"r", "m", "closed form", "approx", "oracle", "discrepancy"});
    for (const auto& rec : records) {
        if (rec.divergent)
            cells.push_back({std::to_string(rec.r), std::to_string(rec.m), "div", "div",
                             "div", "div"});
        else
            cells.push_back({std::to_string(rec.r), std::to_string(rec.m), rec.closed_pi,
                             fmt(rec.approx_value), fmt(rec.oracle_value),
                             format_significant(rec.discrepancy, 3)});
    }
    // Column widths in display characters; the renderings are UTF-8, so
    // count code points rather than bytes (all used glyphs are single-width).
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    std::array<std::size_t, 6> widths{};
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], width(row[i]));
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(widths[i] - width(row[i]) + 2, ' ');
        }
        out << "\n";
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact closed forms for hyperharmonic zeta series"};
    app.name("hyperzeta");
    app.require_subcommand(1);

    // hh
    std::uint64_t hh_n = 0;
    unsigned hh_r = 0;
    int hh_digits = 10;
    CLI::App* hh = app.add_subcommand("hh", "print H_n^(r) exactly (and as a decimal)");
    hh->add_option("n", hh_n, "index n (>= 1)")->required()->check(CLI::PositiveNumber);
    hh->add_option("r", hh_r, "order r (>= 1)")->required()->check(CLI::PositiveNumber);
    hh->add_option("--digits", hh_digits, "significant digits (1-14)")
        ->check(CLI::Range(1, 14));

    // sum
    int sum_r = 0, sum_m = 0;
    bool sum_exact = false, sum_numeric = false;
    std::uint64_t sum_oracle = 0;
    int sum_digits = 10;
    CLI::App* sum = app.add_subcommand("sum", "closed form of sum_n H_n^(r)/n^m");
    sum->add_option("r", sum_r, "hyperharmonic order (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    sum->add_option("m", sum_m, "power of n (>= 1)")->required()->check(CLI::PositiveNumber);
    CLI::Option* opt_exact = sum->add_flag("--exact", sum_exact, "exact renderings only");
    sum->add_flag("--numeric", sum_numeric, "numeric value only")->excludes(opt_exact);
    sum->add_option("--oracle", sum_oracle, "also sum N terms directly and compare")
        ->check(CLI::Range(std::uint64_t(2), std::uint64_t(100000000)));
    sum->add_option("--digits", sum_digits, "significant digits (1-14)")
        ->check(CLI::Range(1, 14));

    // table
    std::string table_r, table_m;
    std::string table_format = "text";
    std::uint64_t table_terms = 100000;
    int table_digits = 10;
    CLI::App* table = app.add_subcommand("table", "grid of sums over ranges of r and m");
    table->add_option("--r", table_r, "order range, N or N..M")->required();
    table->add_option("--m", table_m, "power range, N or N..M")->required();
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--oracle-terms", table_terms, "terms per oracle comparison")
        ->check(CLI::Range(std::uint64_t(2), std::uint64_t(100000000)));
    table->add_option("--digits", table_digits, "significant digits (1-14)")
        ->check(CLI::Range(1, 14));

    // verify
    std::string verify_level;
    double verify_tol = 1e-6;
    CLI::App* verify = app.add_subcommand("verify", "run the internal verification checklist");
    verify->add_option("level", verify_level, "quick or full")
        ->required()
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--tolerance", verify_tol, "closed-form vs oracle tolerance (full)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (hh->parsed()) return run_hh(hh_n, hh_r, hh_digits, out);
        if (sum->parsed())
            return run_sum(sum_r, sum_m, sum_exact, sum_numeric, sum_oracle, sum_digits, out);
        if (table->parsed())
            return run_table(parse_range(table_r), parse_range(table_m), table_format,
                             table_terms, table_digits, out);
        if (verify->parsed())
            return run_verification(verify_level == "full", out, verify_tol) ? exit_ok
                                                                             : exit_verification_failure;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const divergence_error& e) {
        err << e.what() << "\n";
        return exit_divergent;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
    return exit_usage_error;
}

} // namespace hyperzeta
