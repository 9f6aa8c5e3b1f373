#include "lemniscate/closed_forms.hpp"
#include "lemniscate/config.hpp"
#include "lemniscate/error.hpp"
#include "lemniscate/json_io.hpp"
#include "lemniscate/quadrature.hpp"
#include "lemniscate/series.hpp"
#include "lemniscate/suite.hpp"
#include "lemniscate/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <mutex>

namespace py = pybind11;
using namespace lemniscate;

namespace {

// Tables shared by every call; regenerated larger on demand.
std::shared_ptr<const SeriesTables> shared_tables(int index) {
    static std::mutex mu;
    static std::shared_ptr<const SeriesTables> cached;
    std::lock_guard lock(mu);
    if (!cached || cached->max_index() < index)
        cached = std::make_shared<const SeriesTables>(SeriesTables::generate(std::max(index, 16)));
    return cached;
}

BerndtSign sign_from(const std::string& s) {
    if (s == "plus") return BerndtSign::Plus;
    if (s == "minus") return BerndtSign::Minus;
    throw DomainError("sign must be 'plus' or 'minus', got '" + s + "'");
}

SumRoute sum_route_from(const std::string& s) {
    if (s == "theorem") return SumRoute::Theorem;
    if (s == "pipeline") return SumRoute::Pipeline;
    throw DomainError("route must be 'theorem' or 'pipeline', got '" + s + "'");
}

IntegralRoute integral_route_from(const std::string& s) {
    if (s == "theorem") return IntegralRoute::Theorem;
    if (s == "corollary") return IntegralRoute::Corollary;
    throw DomainError("route must be 'theorem' or 'corollary', got '" + s + "'");
}

std::string report_json(const VerificationReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gamma(1/4)/pi closed forms for hyperbolic series and order-3 Berndt-type integrals.";

    static py::exception<Error> base_error(m, "LemniscateError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(base_error.ptr(), e.what());
        }
    });

    py::class_<GammaPiExpr>(m, "GammaPiExpr", "Finite sum of c * Gamma(1/4)^a * pi^(h/2) with rational c.")
        .def("__str__", &GammaPiExpr::str)
        .def("__repr__", [](const GammaPiExpr& e) { return "GammaPiExpr(" + e.ascii() + ")"; })
        .def("ascii", &GammaPiExpr::ascii)
        .def("latex", &GammaPiExpr::latex)
        .def("__eq__", [](const GammaPiExpr& a, const GammaPiExpr& b) { return a == b; })
        .def("__add__", [](const GammaPiExpr& a, const GammaPiExpr& b) { return a + b; })
        .def("__sub__", [](const GammaPiExpr& a, const GammaPiExpr& b) { return a - b; })
        .def("__mul__", [](const GammaPiExpr& a, const GammaPiExpr& b) { return a * b; })
        .def("__neg__", [](const GammaPiExpr& a) { return -a; })
        .def("__len__", &GammaPiExpr::size)
        .def("terms", [](const GammaPiExpr& e) {
            // (numerator, denominator, gamma exponent, doubled pi exponent) in display order.
            std::vector<std::tuple<std::string, std::string, int, int>> out;
            for (const auto& [key, c] : e.ordered_terms()) out.emplace_back(c.numerator().get_str(), c.denominator().get_str(), key.first, key.second);
            return out;
        })
        .def("to_json", [](const GammaPiExpr& e) { return to_json(e).dump(); })
        .def_static("from_json", [](const std::string& s) { return gamma_pi_from_json(Json::parse(s)); })
        .def("evaluate", [](const GammaPiExpr& e, int digits) {
            const NumericContext ctx = NumericContext::with_digits(digits);
            return evaluate(e, ctx).str(digits);
        }, py::arg("digits") = 40);

    m.def("coeffs", [](const std::string& kind, int max_index) {
        const SeriesKind k = series_kind_from_string(kind);
        const int first = k == SeriesKind::SdP ? 0 : 1;
        if (max_index < first) throw DomainError("max_index must be at least " + std::to_string(first));
        const auto t = shared_tables(max_index);
        std::vector<std::pair<int, std::vector<std::string>>> out;
        for (int i = first; i <= max_index; ++i)
            out.emplace_back(series_subscript(k, i), t->table(k).entry(i).to_strings());
        return out;
    }, py::arg("kind"), py::arg("max_index"),
          "Coefficient polynomials of a table as (subscript, [\"num/den\", ...]) pairs, lowest degree first.");

    m.def("closed_sum", [](const std::string& family, int m, const std::string& route) {
        const auto t = shared_tables(required_table_index(m + 1));
        return closed_sum(closed_family_from_string(family), m, sum_route_from(route), *t);
    }, py::arg("family"), py::arg("m"), py::arg("route") = "theorem");

    m.def("berndt_integral", [](const std::string& sign, int m, const std::string& route) {
        const auto t = shared_tables(required_table_index(m + 1));
        return berndt_integral_closed(sign_from(sign), m, integral_route_from(route), *t);
    }, py::arg("sign"), py::arg("m"), py::arg("route") = "theorem");

    m.def("conjecture", &conjecture_closed, "Conjectured value of the a = 1 plus-sign integral (not proven).");

    m.def("membership", [](const GammaPiExpr& e, const std::string& sign, int p) {
        return theorem1_membership_check(e, sign_from(sign), p).passed;
    }, py::arg("expr"), py::arg("sign"), py::arg("p"));

    m.def("numeric_sum", [](const std::string& family, int m, int digits) {
        const NumericContext ctx = NumericContext::with_digits(digits);
        py::gil_scoped_release release;
        return closed_family_numeric(closed_family_from_string(family), m, ctx).str(digits);
    }, py::arg("family"), py::arg("m"), py::arg("digits") = 40);

    m.def("quad_berndt", [](int a, const std::string& sign, int digits) {
        const NumericContext ctx = NumericContext::with_digits(digits);
        const BerndtSign s = sign_from(sign);
        py::gil_scoped_release release;
        return quad_berndt(a, s, ctx).value.str(digits);
    }, py::arg("a"), py::arg("sign"), py::arg("digits") = 40);

    m.def("check_sum", [](const std::string& family, int m, int digits, int tolerance) {
        const ClosedFamily f = closed_family_from_string(family);
        const auto t = shared_tables(required_table_index(m + 1));
        const NumericContext ctx = NumericContext::with_digits(digits);
        py::gil_scoped_release release;
        return report_json(compare(closed_sum(f, m, SumRoute::Theorem, *t), closed_family_numeric(f, m, ctx), tolerance, ctx));
    }, py::arg("family"), py::arg("m"), py::arg("digits") = 40, py::arg("tolerance") = 30);

    m.def("check_integral", [](const std::string& sign, int m, int digits, int tolerance) {
        const BerndtSign s = sign_from(sign);
        const auto t = shared_tables(required_table_index(m + 1));
        const NumericContext ctx = NumericContext::with_digits(digits);
        py::gil_scoped_release release;
        const GammaPiExpr closed = berndt_integral_closed(s, m, IntegralRoute::Theorem, *t);
        return report_json(compare(closed, quad_berndt(berndt_exponent(s, m), s, ctx).value, tolerance, ctx));
    }, py::arg("sign"), py::arg("m"), py::arg("digits") = 40, py::arg("tolerance") = 30);

    m.def("verify_all", [](int precision_digits, const std::string& max_m, const std::vector<std::string>& categories,
                           int jobs, bool include_conjecture) {
        Config c;
        c.precision_digits = precision_digits;
        c.max_m = parse_max_m(max_m);
        c.jobs = jobs;
        c.include_conjecture = include_conjecture;
        c.validate();
        for (const std::string& cat : categories)
            if (std::find(std::begin(kSuiteCategories), std::end(kSuiteCategories), cat) == std::end(kSuiteCategories))
                throw DomainError("unknown category '" + cat + "'");
        py::gil_scoped_release release;
        const auto items = build_suite(c, shared_tables(suite_table_index(c)), categories);
        return suite_to_json(run_suite(items, c.jobs, c.include_conjecture), c).dump();
    }, py::arg("precision_digits") = 40, py::arg("max_m") = "cosh=6,sinh=6,plus=4,minus=4",
          py::arg("categories") = std::vector<std::string>{}, py::arg("jobs") = 1, py::arg("include_conjecture") = false);

    m.attr("__version__") = "0.1.0";
}
