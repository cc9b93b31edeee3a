#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpzero/constants.hpp"
#include "lpzero/criteria.hpp"
#include "lpzero/polynomial.hpp"
#include "lpzero/series.hpp"
#include "lpzero/verify.hpp"
#include "lpzero/zerocount.hpp"

namespace py = pybind11;
using namespace lpzero;

namespace {

py::dict bracket_dict(const Bracket& b) {
    py::dict d;
    d["lo"] = b.lo;
    d["hi"] = b.hi;
    d["predicate"] = b.predicate;
    d["evaluations"] = b.evaluations;
    d["iterations"] = b.iterations;
    d["label"] = b.label;
    return d;
}

py::dict extended_dict(const BasicBracket<Extended>& b, int digits) {
    py::dict d;
    d["lo"] = to_decimal(b.lo, digits);
    d["hi"] = to_decimal(b.hi, digits);
    d["predicate"] = b.predicate;
    d["evaluations"] = b.evaluations;
    d["iterations"] = b.iterations;
    d["label"] = b.label;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Series evaluation, zero counting and Laguerre-Polya tests";

    static py::exception<Error> error(m, "LpzeroError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::handle(error.ptr())(e.what());
            inst.attr("kind") = e.kind();
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::enum_<FamilyKind>(m, "FamilyKind")
        .value("EulerF", FamilyKind::EulerF)
        .value("PartialTheta", FamilyKind::PartialTheta)
        .value("EulerH", FamilyKind::EulerH)
        .value("Custom", FamilyKind::Custom);

    py::class_<SeriesFamily>(m, "SeriesFamily")
        .def_static("euler_f", &SeriesFamily::euler_f, py::arg("a"))
        .def_static("partial_theta", &SeriesFamily::partial_theta, py::arg("a"))
        .def_static("euler_h", &SeriesFamily::euler_h, py::arg("a"))
        .def_static("custom", &SeriesFamily::custom, py::arg("log_coeffs"))
        .def("alternate", &SeriesFamily::alternate, py::arg("on") = true)
        .def("normalize", &SeriesFamily::normalize, py::arg("on") = true)
        .def_readonly("kind", &SeriesFamily::kind)
        .def_readonly("a", &SeriesFamily::a)
        .def_readonly("alternating", &SeriesFamily::alternating)
        .def_readonly("normalized", &SeriesFamily::normalized);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("abs_error_bound", &EvalResult::abs_error_bound)
        .def_readonly("terms_used", &EvalResult::terms_used)
        .def_readonly("truncation_bound", &EvalResult::truncation_bound)
        .def_readonly("rounding_bound", &EvalResult::rounding_bound);

    m.def("evaluate", &evaluate, py::arg("family"), py::arg("z"), py::arg("rel_tol") = 1e-15);
    m.def("evaluate_section", &evaluate_section_bounded, py::arg("family"), py::arg("n"), py::arg("z"));
    m.def("coefficient_ratio", &coefficient_ratio, py::arg("family"), py::arg("k"));
    m.def("q", [](const SeriesFamily& f, int n) { return quotients(f).q(n); }, py::arg("family"), py::arg("n"));
    m.def("p", [](const SeriesFamily& f, int n) { return quotients(f).p(n); }, py::arg("family"), py::arg("n"));

    m.def("real_roots",
          [](std::vector<double> ascending, double lo, double hi) { return real_roots(RealPolynomial(ascending), lo, hi); },
          py::arg("coeffs"), py::arg("lo"), py::arg("hi"),
          "Real roots in [lo, hi] of the polynomial with ascending coefficients.");
    m.def("count_real_roots",
          [](std::vector<double> ascending, double lo, double hi) {
              return count_distinct_real_roots(RealPolynomial(ascending), lo, hi);
          },
          py::arg("coeffs"), py::arg("lo"), py::arg("hi"));

    py::class_<WindingResult>(m, "WindingResult")
        .def_readonly("radius", &WindingResult::radius)
        .def_readonly("count", &WindingResult::count)
        .def_readonly("residual", &WindingResult::residual)
        .def_readonly("min_modulus_seen", &WindingResult::min_modulus_seen)
        .def_readonly("samples_used", &WindingResult::samples_used)
        .def_readonly("certified", &WindingResult::certified);
    m.def("rho_radius", &rho_radius, py::arg("family"), py::arg("j"));
    m.def("count_zeros_in_disk", &count_zeros_in_disk, py::arg("family"), py::arg("r"), py::arg("samples") = 256);

    py::enum_<Verdict>(m, "Verdict")
        .value("InLP", Verdict::InLP)
        .value("NotInLP", Verdict::NotInLP)
        .value("Boundary", Verdict::Boundary)
        .value("Inapplicable", Verdict::Inapplicable);

    py::class_<CriterionReport>(m, "CriterionReport")
        .def_readonly("criterion", &CriterionReport::criterion)
        .def_readonly("verdict", &CriterionReport::verdict)
        .def_readonly("witness_x", &CriterionReport::witness_x)
        .def_readonly("witness_value", &CriterionReport::witness_value)
        .def_readonly("margin", &CriterionReport::margin)
        .def_readonly("error_bound", &CriterionReport::error_bound)
        .def_property_readonly("details", [](const CriterionReport& r) {
            py::dict d;
            for (const auto& [k, v] : r.details) d[py::str(k)] = v;
            return d;
        });

    m.def("hutchinson_test", &hutchinson_test, py::arg("family"), py::arg("n_max") = 50);
    m.def("necessary_q2", &necessary_q2, py::arg("family"));
    m.def("sign_test_Fa", &sign_test_Fa, py::arg("a"), py::arg("grid") = 512, py::arg("tol") = 1e-12);
    m.def("sign_test_theta", &sign_test_theta, py::arg("a"), py::arg("n") = py::none(), py::arg("grid") = 512,
          py::arg("tol") = 1e-12);
    m.def("lemma5_test", &lemma5_test, py::arg("a"));
    m.def("classify_Fa", &classify_Fa, py::arg("a"), py::arg("tol") = 1e-12);

    m.def("q_infinity", [](double tol) { return bracket_dict(q_infinity(tol)); }, py::arg("tol") = 1e-6);
    m.def("c_n", [](int n, double tol) { return bracket_dict(c_n(n, tol)); }, py::arg("n"), py::arg("tol") = 1e-6);
    // Extended-precision tolerances are passed as decimal strings.
    m.def(
        "q_infinity_extended",
        [](const std::string& tol, int digits) { return extended_dict(q_infinity_extended(Extended(tol)), digits); },
        py::arg("tol"), py::arg("digits") = 50);
    m.def(
        "c_n_extended",
        [](int n, const std::string& tol, int digits) { return extended_dict(c_n_extended(n, Extended(tol)), digits); },
        py::arg("n"), py::arg("tol"), py::arg("digits") = 50);
    m.def("critical_a", [](double tol) {
        const auto c = critical_a(tol);
        py::dict d = bracket_dict(c.bracket);
        d["consistent_with_lower_bound"] = c.consistent_with_lower_bound;
        d["within_reference_bracket"] = c.within_reference_bracket;
        return d;
    }, py::arg("tol") = 1e-5);
    m.def("thresholds", [] {
        py::list out;
        for (const auto& r : thresholds()) {
            py::dict d;
            d["name"] = r.name;
            d["computed"] = r.computed;
            d["reference"] = r.reference;
            d["deviation"] = r.deviation;
            d["accepted"] = r.accepted;
            d["informational"] = r.informational;
            out.append(d);
        }
        return out;
    });

    py::class_<LemmaCheckResult>(m, "LemmaCheckResult")
        .def_readonly("lemma", &LemmaCheckResult::lemma)
        .def_readonly("grid_points", &LemmaCheckResult::grid_points)
        .def_readonly("inequalities", &LemmaCheckResult::inequalities)
        .def_readonly("inapplicable", &LemmaCheckResult::inapplicable)
        .def_readonly("worst_margin", &LemmaCheckResult::worst_margin)
        .def_readonly("notes", &LemmaCheckResult::notes)
        .def_property_readonly("failures", [](const LemmaCheckResult& r) { return r.failures.size(); })
        .def("passed", &LemmaCheckResult::passed);
    m.def("check_lemma2", &check_lemma2, py::arg("a_grid"), py::arg("enforce_hypotheses") = true);
    m.def("check_rouche_gap", &check_rouche_gap, py::arg("a_grid"), py::arg("enforce_hypotheses") = true);
    m.def("check_lemma6", &check_lemma6, py::arg("a_grid"), py::arg("k_max"), py::arg("enforce_hypotheses") = true);
    m.def("check_lemma4_algebra", &check_lemma4_algebra, py::arg("samples"), py::arg("seed") = 1);
}
