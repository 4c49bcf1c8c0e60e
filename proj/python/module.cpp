// Python bindings for the hyperzeta core. Exact rationals cross the boundary
// as fractions.Fraction / int via the type casters below, so Python callers
// never see truncated values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/oracle.hpp"
#include "hyperzeta/power_series.hpp"
#include "hyperzeta/summation.hpp"
#include "hyperzeta/zeta.hpp"
#include "hyperzeta/zeta_algebra.hpp"

namespace py = pybind11;
using namespace hyperzeta;

namespace pybind11::detail {

// mpz_class <-> Python int (arbitrary precision, via decimal strings).
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        str text(src);
        try {
            value = mpz_class(std::string(text), 10);
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

// mpq_class <-> fractions.Fraction (also accepts Python int on the way in).
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false; // no silent rounding
        str text(src);
        try {
            value = mpq_class(std::string(text), 10);
        } catch (const std::invalid_argument&) {
            return false;
        }
        value.canonicalize();
        return true;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(src.get_str()).release();
    }
};

} // namespace pybind11::detail

namespace {

std::vector<Rational> series_coeffs(const PowerSeries& series) {
    std::vector<Rational> coeffs;
    coeffs.reserve(series.order() + 1);
    for (std::size_t n = 0; n <= series.order(); ++n) coeffs.push_back(series.coeff(n));
    return coeffs;
}

py::tuple monomial_args(const ZetaMonomial& monomial) {
    py::tuple args(monomial.degree());
    for (int i = 0; i < monomial.degree(); ++i) args[i] = monomial.arg(i);
    return args;
}

} // namespace

PYBIND11_MODULE(_hyperzeta, mod) {
    mod.doc() = "Exact hyperharmonic numbers and their zeta-value sums";

    py::register_exception<divergence_error>(mod, "DivergenceError", PyExc_ValueError);
    py::register_exception<capacity_error>(mod, "CapacityError", PyExc_RuntimeError);
    py::register_exception<accuracy_error>(mod, "AccuracyError", PyExc_RuntimeError);

    py::class_<ZetaExpr>(mod, "ZetaExpr",
                         "Exact rational combination of zeta values (degree <= 2)")
        .def("eval", &ZetaExpr::eval, "Evaluate to a double")
        .def(
            "render",
            [](const ZetaExpr& expr, const std::string& style) {
                return expr.render(render_style_from(style));
            },
            py::arg("style") = "zeta-only", "Render as text ('zeta-only' or 'pi-power')")
        .def("degree", &ZetaExpr::degree)
        .def("term_count", &ZetaExpr::term_count)
        .def("is_zero", &ZetaExpr::is_zero)
        .def(
            "terms",
            [](const ZetaExpr& expr) {
                std::vector<std::pair<py::tuple, Rational>> out;
                for (const auto& [monomial, coeff] : expr.terms())
                    out.emplace_back(monomial_args(monomial), coeff);
                return out;
            },
            "List of (zeta argument tuple, coefficient) pairs; () is the constant term")
        .def("__eq__", [](const ZetaExpr& a, const ZetaExpr& b) { return a == b; })
        .def("__repr__", [](const ZetaExpr& expr) {
            return "<ZetaExpr " + expr.render(RenderStyle::zeta_only) + ">";
        });

    py::class_<SumReport>(mod, "SumReport", "Closed form vs oracle comparison")
        .def_property_readonly("r", [](const SumReport& rep) { return rep.key.r; })
        .def_property_readonly("m", [](const SumReport& rep) { return rep.key.m; })
        .def_readonly("closed_form", &SumReport::closed_form)
        .def_readonly("closed_value", &SumReport::closed_value)
        .def_readonly("oracle_value", &SumReport::oracle_value)
        .def_readonly("discrepancy", &SumReport::discrepancy)
        .def_readonly("terms_used", &SumReport::terms_used)
        .def("__repr__", [](const SumReport& rep) {
            return "<SumReport " + sum_name(rep.key) + " discrepancy " +
                   std::to_string(rep.discrepancy) + ">";
        });

    // Exact combinatorics
    mod.def("harmonic", &harmonic, py::arg("n"), "Harmonic number H_n as a Fraction");
    mod.def("hyperharmonic", &hyperharmonic, py::arg("n"), py::arg("r"),
            "Hyperharmonic number H_n^(r) via the prefix-sum recurrence");
    mod.def("hyperharmonic_closed", &hyperharmonic_closed, py::arg("n"), py::arg("r"),
            "H_n^(r) via the binomial closed form");
    mod.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    mod.def("pochhammer", &pochhammer, py::arg("x"), py::arg("n"),
            "Rising factorial x(x+1)...(x+n-1)");
    mod.def("stirling_cycle", &stirling_cycle, py::arg("n"), py::arg("k"),
            "Unsigned Stirling cycle number c(n, k)");
    mod.def("r_stirling_cycle", &r_stirling_cycle, py::arg("n"), py::arg("k"),
            py::arg("r"), "Restricted Stirling cycle number");
    mod.def(
        "factorial", [](unsigned long n) { return hyperzeta::factorial(n); },
        py::arg("n"));

    // Zeta values
    mod.def("bernoulli", &bernoulli, py::arg("n"), "Bernoulli number B_n as a Fraction");
    mod.def("zeta", &zeta, py::arg("m"), "zeta(m) for integer m >= 2");
    mod.def(
        "zeta_even_pi_form",
        [](int m) {
            ZetaEvenForm form = zeta_even_pi_form(m);
            return py::make_tuple(form.coefficient, form.pi_power);
        },
        py::arg("m"), "zeta(m) for even m as (rational coefficient, pi power)");

    // Closed-form summation
    mod.def(
        "convergent", [](int r, int m) { return convergent({r, m}); }, py::arg("r"),
        py::arg("m"), "Whether S(r, m) converges (m >= r + 1)");
    mod.def(
        "sum_name", [](int r, int m) { return sum_name({r, m}); }, py::arg("r"),
        py::arg("m"));
    mod.def("euler_sum", &euler_sum, py::arg("m"),
            "S(1, m) by the corrected classical formula");
    mod.def("rising_factorial_sum", &rising_factorial_sum, py::arg("k"), py::arg("m"),
            "Exact closed form of the auxiliary sum B(k, m)");
    mod.def("rising_factorial_sum_numeric", &rising_factorial_sum_numeric, py::arg("k"),
            py::arg("m"), py::arg("tol") = 1e-10,
            "B(k, m) summed directly with tail control");
    mod.def(
        "sum_closed_form", [](int r, int m) { return sum_closed_form({r, m}); },
        py::arg("r"), py::arg("m"),
        "S(r, m) as an exact zeta-value combination; raises DivergenceError if m <= r");

    // Numeric oracle
    mod.def(
        "direct_sum",
        [](int r, int m, std::uint64_t terms) { return direct_sum({r, m}, terms); },
        py::arg("r"), py::arg("m"), py::arg("terms"),
        "Partial sum of the defining series with compensated accumulation");
    mod.def(
        "tail_estimate",
        [](int r, int m, std::uint64_t terms) { return tail_estimate({r, m}, terms); },
        py::arg("r"), py::arg("m"), py::arg("terms"));
    mod.def(
        "accelerated_sum",
        [](int r, int m, std::uint64_t terms) { return accelerated_sum({r, m}, terms); },
        py::arg("r"), py::arg("m"), py::arg("terms"),
        "Partial sum plus integral tail estimate");
    mod.def(
        "oracle_report",
        [](int r, int m, std::uint64_t terms) { return oracle_report({r, m}, terms); },
        py::arg("r"), py::arg("m"), py::arg("terms") = std::uint64_t(100000));

    // Generating functions and analytic checks
    mod.def(
        "hyperharmonic_gf_coeffs",
        [](unsigned r, std::size_t order) {
            return series_coeffs(hyperharmonic_gf(r, order));
        },
        py::arg("r"), py::arg("order"),
        "Coefficients of -log(1-z)/(1-z)^r through z^order");
    mod.def(
        "stirling_gf_coeffs",
        [](unsigned m, std::size_t order) { return series_coeffs(stirling_gf(m, order)); },
        py::arg("m"), py::arg("order"),
        "Coefficients of (-log(1-z))^m / m! through z^order");
    mod.def("dilog", &dilog, py::arg("x"), "Dilogarithm on [-0.5, 1)");
    mod.def("antiderivative_residual", &antiderivative_residual, py::arg("r"),
            py::arg("z"), "Residual of the tail antiderivative against its integrand");
    mod.def("harmonic_bounds_check", &harmonic_bounds_check, py::arg("n"),
            "Whether H_n lies inside the logarithmic sandwich");
    mod.def("sandwich_bounds_check", &sandwich_bounds_check, py::arg("r"), py::arg("s"),
            py::arg("terms"), "Whether a partial sum of S(r, r+s) sits in crude bounds");
    mod.def("asymptotic_ratio", &asymptotic_ratio, py::arg("r"), py::arg("n"),
            "H_n^(r) against its leading asymptotic term");
}
