#include "pitail/analysis.hpp"
#include "pitail/catalog.hpp"
#include "pitail/errors.hpp"
#include "pitail/exact.hpp"
#include "pitail/hp_eval.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace pitail;

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

py::dict series_dict(const SeriesParams& e) {
    py::dict d;
    d["id"] = e.id;
    d["p_coeff"] = to_string(e.p.coeff);
    d["p_radicand"] = e.p.radicand;
    d["q"] = to_string(e.q);
    d["r"] = e.r;
    d["s"] = e.s;
    d["t"] = to_string(e.t);
    d["conjectural"] = e.conjectural;
    return d;
}

py::dict hp_dict(const BigFloat& x) {
    py::dict d;
    d["value"] = x.to_decimal();
    d["bits"] = static_cast<long>(x.precision());
    return d;
}

py::dict report_dict(const RemainderReport& report) {
    py::dict d;
    d["series"] = report.series_id;
    d["n"] = report.n;
    d["J"] = report.J;
    d["remainder"] = hp_dict(report.remainder_value);
    d["normalizer"] = hp_dict(report.prefactor_value);
    d["ratio"] = hp_dict(report.ratio);
    d["expansion"] = hp_dict(report.expansion);
    d["abs_error"] = hp_dict(report.abs_error);
    d["scaled_error"] = hp_dict(report.scaled_error);
    return d;
}

} // namespace

PYBIND11_MODULE(_pitail, m) {
    m.doc() = "exact expansion coefficients and high-precision remainder "
              "analysis for rational hypergeometric series of 1/pi";

    m.def("catalog", [] {
        py::list out;
        for (const auto& e : series_catalog()) out.append(series_dict(e));
        return out;
    });

    m.def("series", [](int id) { return series_dict(series_by_id(id)); },
          py::arg("id"));

    m.def(
        "coefficients",
        [](int id, unsigned long J) {
            return rational_strings(remainder_expansion(series_by_id(id), J).c);
        },
        py::arg("series"), py::arg("J"),
        "exact expansion coefficients c_0..c_{J-1} as num/den strings");

    m.def(
        "log_prefactor_coefficients",
        [](const std::string& q, unsigned long J) {
            FormalSeries f = prefactor_log_series(parse_rational(q), J);
            return rational_strings(f.coeffs());
        },
        py::arg("q"), py::arg("J"),
        "coefficients f_0..f_{J-1} of the log-prefactor expansion");

    m.def(
        "sign_pattern",
        [](int id, unsigned long J) {
            return sign_pattern(remainder_expansion(series_by_id(id), J));
        },
        py::arg("series"), py::arg("J"));

    m.def(
        "optimal_truncation",
        [](int id, unsigned long J, unsigned long n) {
            return optimal_truncation(remainder_expansion(series_by_id(id), J), n);
        },
        py::arg("series"), py::arg("J"), py::arg("n"));

    m.def(
        "pi", [](long prec) { return pi_value(prec).to_decimal(); },
        py::arg("prec") = 256);

    m.def(
        "reference",
        [](int id, long prec) {
            return reference_value(series_by_id(id), prec).to_decimal();
        },
        py::arg("series"), py::arg("prec") = 256);

    m.def(
        "remainder",
        [](int id, unsigned long n, long prec) {
            return remainder(series_by_id(id), n, prec).to_decimal();
        },
        py::arg("series"), py::arg("n"), py::arg("prec") = 256);

    m.def(
        "log_prefactor",
        [](const std::string& q, unsigned long n, long prec) {
            return log_prefactor_direct(parse_rational(q), n, prec).to_decimal();
        },
        py::arg("q"), py::arg("n"), py::arg("prec") = 256);

    m.def(
        "remainder_report",
        [](int id, unsigned long n, unsigned long J, long prec) {
            return report_dict(remainder_report(series_by_id(id), n, J, prec));
        },
        py::arg("series"), py::arg("n"), py::arg("J"), py::arg("prec") = 256);

    m.def(
        "order_sweep",
        [](int id, const std::vector<unsigned long>& n_list, unsigned long J,
           long prec, unsigned jobs) {
            py::list out;
            for (const auto& report :
                 order_sweep(series_by_id(id), n_list, J, prec, jobs))
                out.append(report_dict(report));
            return out;
        },
        py::arg("series"), py::arg("n_list"), py::arg("J"),
        py::arg("prec") = 256, py::arg("jobs") = 0);

    m.def(
        "accelerate",
        [](int id, unsigned long n, py::object J, long prec) {
            std::optional<unsigned long> J_opt;
            if (!J.is_none()) J_opt = J.cast<unsigned long>();
            AccelerationReport report =
                accelerate(series_by_id(id), n, J_opt, prec);
            py::dict d;
            d["series"] = report.series_id;
            d["n"] = report.n;
            d["J_used"] = report.J_used;
            d["auto_selected"] = report.auto_selected;
            d["conjectural"] = report.conjectural;
            d["raw_estimate"] = hp_dict(report.raw_estimate);
            d["corrected_estimate"] = hp_dict(report.corrected_estimate);
            d["raw_error"] = hp_dict(report.raw_error);
            d["corrected_error"] = hp_dict(report.corrected_error);
            d["digits_gained"] = report.digits_gained;
            return d;
        },
        py::arg("series"), py::arg("n"), py::arg("J") = py::none(),
        py::arg("prec") = 256);

    m.def(
        "envelope",
        [](unsigned long n_max, unsigned long L_max, long prec, unsigned jobs,
           int series, bool include_cells) {
            EnvelopeSummary summary =
                envelope_check(n_max, L_max, prec, jobs, series);
            py::dict d;
            d["series"] = summary.series_id;
            d["exploratory"] = summary.exploratory;
            d["n_max"] = summary.n_max;
            d["L_max"] = summary.L_max;
            d["prec"] = static_cast<long>(summary.prec);
            d["holds"] = summary.holds_count;
            d["violated"] = summary.violated_count;
            d["indeterminate"] = summary.indeterminate_count;
            d["all_hold"] = summary.all_hold;
            if (include_cells) {
                py::list cells;
                for (const auto& cell : summary.cells) {
                    py::dict cj;
                    cj["L"] = cell.L;
                    cj["n"] = cell.n;
                    cj["lower"] = hp_dict(cell.lower);
                    cj["ratio"] = hp_dict(cell.ratio);
                    cj["upper"] = hp_dict(cell.upper);
                    cj["margin"] = hp_dict(cell.margin);
                    cj["status"] = to_string(cell.status);
                    cells.append(cj);
                }
                d["cells"] = cells;
            }
            return d;
        },
        py::arg("n_max"), py::arg("L_max"), py::arg("prec") = 256,
        py::arg("jobs") = 0, py::arg("series") = 33,
        py::arg("include_cells") = false);
}
