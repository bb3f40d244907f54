#include "pitail/analysis.hpp"
#include "pitail/catalog.hpp"
#include "pitail/catalog_json.hpp"
#include "pitail/errors.hpp"
#include "pitail/exact.hpp"
#include "pitail/hp_eval.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace pitail;

constexpr const char* kConjecturalWarning =
    "series 33 is conjectural: the expansion is applied beyond its proven "
    "hypothesis |t| < 1";
constexpr const char* kExploratoryWarning =
    "exploratory: the enveloping property has no established claim for this "
    "series";

struct GlobalOpts {
    std::string format = "text";
    long prec = 256;
    unsigned jobs = 0;
};

bool json_mode(const GlobalOpts& g) { return g.format == "json"; }

mpfr_prec_t checked_prec(const GlobalOpts& g) {
    if (g.prec < 64) throw std::invalid_argument("--prec must be at least 64");
    if (g.prec > (1L << 24)) throw std::invalid_argument("--prec is unreasonably large");
    return static_cast<mpfr_prec_t>(g.prec);
}

ordered_json hp_json(const BigFloat& x) {
    return {{"value", x.to_decimal()}, {"bits", static_cast<long>(x.precision())}};
}

std::string hp_text(const BigFloat& x) {
    return x.to_decimal() + " (" +
           std::to_string(BigFloat::decimal_digits(x.precision())) + " digits)";
}

void emit(const GlobalOpts& g, const std::string& command,
          const ordered_json& params, const ordered_json& result,
          const std::vector<std::string>& warnings,
          const std::string& text_body) {
    if (json_mode(g)) {
        ordered_json envelope;
        envelope["command"] = command;
        envelope["params"] = params;
        envelope["result"] = result;
        envelope["warnings"] = warnings;
        std::cout << envelope.dump(2) << "\n";
    } else {
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        std::cout << text_body;
    }
}

std::string render_scale(const Surd& p) {
    if (p.radicand == 1) return to_string(p.coeff);
    return to_string(p.coeff) + "*sqrt(" + std::to_string(p.radicand) + ")";
}

int cmd_catalog_list(const GlobalOpts& g) {
    const auto& catalog = series_catalog();
    std::ostringstream text;
    text << "id  q     r          s          t                     p\n";
    for (const auto& e : catalog) {
        std::ostringstream row;
        row.setf(std::ios::left);
        row.width(4);
        row << e.id;
        row.width(6);
        row << to_string(e.q);
        row.width(11);
        row << e.r;
        row.width(11);
        row << e.s;
        row.width(22);
        row << to_string(e.t);
        row << render_scale(e.p);
        if (e.conjectural) row << "  (conjectural)";
        text << row.str() << "\n";
    }
    emit(g, "catalog list", ordered_json::object(), catalog_to_json(), {}, text.str());
    return 0;
}

int cmd_catalog_export(const GlobalOpts& g) {
    ordered_json arr = catalog_to_json();
    if (json_mode(g)) {
        emit(g, "catalog export", ordered_json::object(), arr, {}, "");
    } else {
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_coeffs(const GlobalOpts& g, int series_id, unsigned long J) {
    const SeriesParams& params = series_by_id(series_id);
    CoeffTable table = remainder_expansion(params, J);
    std::vector<std::string> warnings;
    if (params.conjectural) warnings.push_back(kConjecturalWarning);

    ordered_json result;
    result["series"] = series_id;
    result["J"] = J;
    ordered_json c = ordered_json::array();
    std::ostringstream text;
    for (const auto& value : table.c) {
        c.push_back(to_string(value));
        text << to_string(value) << "\n";
    }
    result["c"] = c;
    emit(g, "coeffs", {{"series", series_id}, {"J", J}}, result, warnings, text.str());
    return 0;
}

int cmd_alpha_coeffs(const GlobalOpts& g, const std::string& q_text, unsigned long J) {
    const Rational q = parse_rational(q_text);
    FormalSeries f = prefactor_log_series(q, J);

    ordered_json result;
    result["q"] = to_string(q);
    result["J"] = J;
    result["first_index"] = 1;
    ordered_json values = ordered_json::array();
    std::ostringstream text;
    for (unsigned long j = 1; j < f.order(); ++j) {
        values.push_back(to_string(f.coeff(j)));
        text << to_string(f.coeff(j)) << "\n";
    }
    result["f"] = values;
    emit(g, "alpha-coeffs", {{"q", to_string(q)}, {"J", J}}, result, {}, text.str());
    return 0;
}

ordered_json report_json(const RemainderReport& report) {
    ordered_json j;
    j["series"] = report.series_id;
    j["n"] = report.n;
    j["J"] = report.J;
    j["remainder"] = hp_json(report.remainder_value);
    j["normalizer"] = hp_json(report.prefactor_value);
    j["ratio"] = hp_json(report.ratio);
    j["expansion"] = hp_json(report.expansion);
    j["abs_error"] = hp_json(report.abs_error);
    j["scaled_error"] = hp_json(report.scaled_error);
    return j;
}

int cmd_remainder(const GlobalOpts& g, int series_id, unsigned long n,
                  unsigned long J) {
    const SeriesParams& params = series_by_id(series_id);
    mpfr_prec_t prec = checked_prec(g);
    RemainderReport report = remainder_report(params, n, J, prec);
    std::vector<std::string> warnings;
    if (params.conjectural) warnings.push_back(kConjecturalWarning);

    std::ostringstream text;
    text << "series       " << series_id << "\n"
         << "n            " << n << "\n"
         << "J            " << J << "\n"
         << "remainder    " << hp_text(report.remainder_value) << "\n"
         << "normalizer   " << hp_text(report.prefactor_value) << "\n"
         << "ratio        " << hp_text(report.ratio) << "\n"
         << "expansion    " << hp_text(report.expansion) << "\n"
         << "abs_error    " << hp_text(report.abs_error) << "\n"
         << "scaled_error " << hp_text(report.scaled_error) << "\n";
    emit(g, "remainder",
         {{"series", series_id}, {"n", n}, {"J", J}, {"prec", g.prec}},
         report_json(report), warnings, text.str());
    return 0;
}

int cmd_alpha(const GlobalOpts& g, const std::string& q_text, unsigned long n) {
    const Rational q = parse_rational(q_text);
    mpfr_prec_t prec = checked_prec(g);
    BigFloat alpha = log_prefactor_direct(q, n, prec);

    ordered_json result;
    result["q"] = to_string(q);
    result["n"] = n;
    result["alpha"] = hp_json(alpha);
    emit(g, "alpha", {{"q", to_string(q)}, {"n", n}, {"prec", g.prec}}, result, {},
         hp_text(alpha) + "\n");
    return 0;
}

int cmd_envelope(const GlobalOpts& g, unsigned long L_max, unsigned long n_max,
                 int series_id) {
    mpfr_prec_t prec = checked_prec(g);
    EnvelopeSummary summary = envelope_check(n_max, L_max, prec, g.jobs, series_id);
    std::vector<std::string> warnings;
    if (summary.exploratory) warnings.push_back(kExploratoryWarning);

    ordered_json result;
    result["series"] = summary.series_id;
    result["exploratory"] = summary.exploratory;
    result["L_max"] = summary.L_max;
    result["n_max"] = summary.n_max;
    result["prec"] = static_cast<long>(summary.prec);
    result["holds"] = summary.holds_count;
    result["violated"] = summary.violated_count;
    result["indeterminate"] = summary.indeterminate_count;
    result["all_hold"] = summary.all_hold;
    ordered_json cells = ordered_json::array();
    std::ostringstream text;
    text << "L    n    lower            ratio            upper            "
            "margin       status\n";
    for (const auto& cell : summary.cells) {
        ordered_json cj;
        cj["L"] = cell.L;
        cj["n"] = cell.n;
        cj["lower"] = hp_json(cell.lower);
        cj["ratio"] = hp_json(cell.ratio);
        cj["upper"] = hp_json(cell.upper);
        cj["margin"] = hp_json(cell.margin);
        cj["status"] = to_string(cell.status);
        cells.push_back(std::move(cj));

        std::ostringstream row;
        row.setf(std::ios::left);
        row.width(5);
        row << cell.L;
        row.width(5);
        row << cell.n;
        row.width(17);
        row << cell.lower.to_decimal(10);
        row.width(17);
        row << cell.ratio.to_decimal(10);
        row.width(17);
        row << cell.upper.to_decimal(10);
        row.width(13);
        row << cell.margin.to_decimal(4);
        row << to_string(cell.status);
        text << row.str() << "\n";
    }
    result["cells"] = std::move(cells);
    text << (summary.all_hold ? "verdict: holds for every cell\n"
                              : "verdict: NOT confirmed for every cell\n");
    emit(g, "envelope",
         {{"series", series_id},
          {"L_max", L_max},
          {"n_max", n_max},
          {"prec", g.prec},
          {"jobs", g.jobs}},
         result, warnings, text.str());
    return summary.all_hold ? 0 : 1;
}

int cmd_accelerate(const GlobalOpts& g, int series_id, unsigned long n,
                   const std::string& J_text) {
    const SeriesParams& params = series_by_id(series_id);
    mpfr_prec_t prec = checked_prec(g);
    std::optional<unsigned long> J;
    if (J_text != "auto") {
        size_t pos = 0;
        unsigned long parsed = std::stoul(J_text, &pos);
        if (pos != J_text.size())
            throw std::invalid_argument("--J expects an integer or 'auto'");
        J = parsed;
    }
    AccelerationReport report = accelerate(params, n, J, prec);
    std::vector<std::string> warnings;
    if (report.conjectural) warnings.push_back(kConjecturalWarning);

    ordered_json result;
    result["series"] = report.series_id;
    result["n"] = report.n;
    result["J_used"] = report.J_used;
    result["auto_selected"] = report.auto_selected;
    result["conjectural"] = report.conjectural;
    result["raw_estimate"] = hp_json(report.raw_estimate);
    result["corrected_estimate"] = hp_json(report.corrected_estimate);
    result["raw_error"] = hp_json(report.raw_error);
    result["corrected_error"] = hp_json(report.corrected_error);
    result["digits_gained"] = report.digits_gained;

    std::ostringstream text;
    text << "series             " << report.series_id << "\n"
         << "n                  " << report.n << "\n"
         << "J_used             " << report.J_used
         << (report.auto_selected ? " (auto)" : "") << "\n"
         << "raw_estimate       " << hp_text(report.raw_estimate) << "\n"
         << "corrected_estimate " << hp_text(report.corrected_estimate) << "\n"
         << "raw_error          " << hp_text(report.raw_error) << "\n"
         << "corrected_error    " << hp_text(report.corrected_error) << "\n"
         << "digits_gained      " << report.digits_gained << "\n";
    emit(g, "accelerate",
         {{"series", series_id}, {"n", n}, {"J", J_text}, {"prec", g.prec}},
         result, warnings, text.str());
    return 0;
}

std::vector<unsigned long> parse_n_list(const std::string& text) {
    std::vector<unsigned long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        size_t pos = 0;
        out.push_back(std::stoul(piece, &pos));
        if (pos != piece.size())
            throw std::invalid_argument("--n expects a comma-separated integer list");
    }
    if (out.empty()) throw std::invalid_argument("--n list must not be empty");
    return out;
}

int cmd_order_sweep(const GlobalOpts& g, int series_id, const std::string& n_text,
                    unsigned long J) {
    const SeriesParams& params = series_by_id(series_id);
    mpfr_prec_t prec = checked_prec(g);
    std::vector<unsigned long> n_list = parse_n_list(n_text);
    std::vector<RemainderReport> reports = order_sweep(params, n_list, J, prec, g.jobs);
    std::vector<std::string> warnings;
    if (params.conjectural) warnings.push_back(kConjecturalWarning);

    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    text << "n      ratio                 expansion             scaled_error\n";
    for (const auto& report : reports) {
        rows.push_back(report_json(report));
        std::ostringstream row;
        row.setf(std::ios::left);
        row.width(7);
        row << report.n;
        row.width(22);
        row << report.ratio.to_decimal(14);
        row.width(22);
        row << report.expansion.to_decimal(14);
        row << report.scaled_error.to_decimal(14);
        text << row.str() << "\n";
    }

    // Spread of the scaled errors across the sweep, the empirical order check.
    BigFloat spread(64);
    mpfr_set_nan(spread.raw());
    if (reports.size() > 1) {
        const BigFloat* lo = &reports[0].scaled_error;
        const BigFloat* hi = &reports[0].scaled_error;
        for (const auto& report : reports) {
            if (mpfr_cmpabs(report.scaled_error.raw(), lo->raw()) < 0)
                lo = &report.scaled_error;
            if (mpfr_cmpabs(report.scaled_error.raw(), hi->raw()) > 0)
                hi = &report.scaled_error;
        }
        if (!lo->is_zero())
            mpfr_div(spread.raw(), hi->raw(), lo->raw(), MPFR_RNDN);
        text << "scaled_error spread (max/min) = " << spread.to_decimal(6) << "\n";
    }

    ordered_json result;
    result["series"] = series_id;
    result["J"] = J;
    result["prec"] = g.prec;
    result["rows"] = std::move(rows);
    if (reports.size() > 1) result["scaled_error_spread"] = spread.to_decimal(8);
    emit(g, "order-sweep",
         {{"series", series_id}, {"n", n_text}, {"J", J}, {"prec", g.prec}},
         result, warnings, text.str());
    return 0;
}

int cmd_signs(const GlobalOpts& g, int series_id, unsigned long J) {
    const SeriesParams& params = series_by_id(series_id);
    CoeffTable table = remainder_expansion(params, J);
    std::string pattern = sign_pattern(table);
    std::vector<std::string> warnings;
    if (params.conjectural) warnings.push_back(kConjecturalWarning);

    ordered_json result;
    result["series"] = series_id;
    result["J"] = J;
    result["pattern"] = pattern;
    emit(g, "signs", {{"series", series_id}, {"J", J}}, result, warnings,
         pattern + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"truncation remainders of rational series for 1/pi: exact "
                 "expansion coefficients, high-precision remainders, and "
                 "their asymptotic analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--prec", g.prec, "working precision in bits")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0 = all cores)")
        ->capture_default_str();

    auto* cat = app.add_subcommand("catalog", "the 36 series and their parameters");
    cat->require_subcommand(1);
    cat->fallthrough();
    auto* cat_list = cat->add_subcommand("list", "print the catalog");
    cat_list->fallthrough();
    auto* cat_export = cat->add_subcommand("export", "emit the catalog as JSON");
    cat_export->fallthrough();

    int series_id = 0;
    unsigned long n = 0;
    unsigned long J = 0;
    std::string q_text;
    std::string accel_J = "auto";
    std::string n_list_text;
    unsigned long L_max = 0, n_max = 0;
    int envelope_series = 33;

    auto* coeffs = app.add_subcommand("coeffs", "exact expansion coefficients");
    coeffs->fallthrough();
    coeffs->add_option("--series", series_id, "catalog id")->required();
    coeffs->add_option("--J", J, "number of coefficients")->required();

    auto* alpha_coeffs =
        app.add_subcommand("alpha-coeffs", "exact log-prefactor coefficients");
    alpha_coeffs->fallthrough();
    alpha_coeffs->add_option("--q", q_text, "rational q as num/den")->required();
    alpha_coeffs->add_option("--J", J, "truncation order")->required();

    auto* rem = app.add_subcommand("remainder", "remainder study at one n");
    rem->fallthrough();
    rem->add_option("--series", series_id, "catalog id")->required();
    rem->add_option("--n", n, "truncation index")->required();
    rem->add_option("--J", J, "expansion terms for comparison")->default_val(6);

    auto* alpha = app.add_subcommand("alpha", "direct log-prefactor value");
    alpha->fallthrough();
    alpha->add_option("--q", q_text, "rational q as num/den")->required();
    alpha->add_option("--n", n, "index")->required();

    auto* envelope = app.add_subcommand("envelope", "bracketing sweep");
    envelope->fallthrough();
    envelope->add_option("--L-max", L_max, "largest block index")->required();
    envelope->add_option("--n-max", n_max, "largest n")->required();
    envelope->add_option("--series", envelope_series,
                         "catalog id (non-default values are exploratory)")
        ->default_val(33);

    auto* accel = app.add_subcommand("accelerate", "tail-corrected estimate");
    accel->fallthrough();
    accel->add_option("--series", series_id, "catalog id")->required();
    accel->add_option("--n", n, "truncation index")->required();
    accel->add_option("--J", accel_J, "terms to use, or 'auto'")->default_val("auto");

    auto* sweep = app.add_subcommand("order-sweep", "remainder study across n");
    sweep->fallthrough();
    sweep->add_option("--series", series_id, "catalog id")->required();
    sweep->add_option("--n", n_list_text, "ascending comma-separated n list")
        ->required();
    sweep->add_option("--J", J, "expansion terms for comparison")->required();

    auto* signs = app.add_subcommand("signs", "sign pattern of the coefficients");
    signs->fallthrough();
    signs->add_option("--series", series_id, "catalog id")->required();
    signs->add_option("--J", J, "number of coefficients")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cat_list) return cmd_catalog_list(g);
        if (*cat_export) return cmd_catalog_export(g);
        if (*coeffs) return cmd_coeffs(g, series_id, J);
        if (*alpha_coeffs) return cmd_alpha_coeffs(g, q_text, J);
        if (*rem) return cmd_remainder(g, series_id, n, J);
        if (*alpha) return cmd_alpha(g, q_text, n);
        if (*envelope) return cmd_envelope(g, L_max, n_max, envelope_series);
        if (*accel) return cmd_accelerate(g, series_id, n, accel_J);
        if (*sweep) return cmd_order_sweep(g, series_id, n_list_text, J);
        if (*signs) return cmd_signs(g, series_id, J);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const series_not_found& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
