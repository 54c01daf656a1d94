#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpenv/analysis.hpp"
#include "lpenv/extremal.hpp"
#include "lpenv/json_io.hpp"
#include "lpenv/verify.hpp"

namespace py = pybind11;
using namespace lpenv;

namespace {

Exponent exponent(double p) { return Exponent::classify(p); }
ConeTriple triple(double x, double y, double z) { return ConeTriple::make(x, y, z); }

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["p"] = r.p;
    d["triple"] = py::make_tuple(r.triple.x(), r.triple.y(), r.triple.z());
    d["actual"] = r.has_actual ? py::object(py::float_(r.actual)) : py::object(py::none());
    d["upper"] = r.upper;
    d["lower"] = r.lower;
    d["carlen"] = r.carlen;
    d["carlen_direction"] = r.carlen_upper ? "upper" : "lower";
    d["upper_margin"] = r.upper_margin;
    d["lower_margin"] = r.lower_margin;
    d["carlen_margin"] = r.carlen_margin;
    d["worst_margin"] = r.worst_margin();
    return d;
}

py::dict suite_dict(const SuiteReport& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["checked"] = r.checked;
    d["violations"] = r.violations;
    d["worst_margin"] = r.worst_margin;
    d["notes"] = r.notes;
    return d;
}

EnvelopeKind kind_of(const std::string& name) {
    if (name == "concave") return EnvelopeKind::Concave;
    if (name == "convex") return EnvelopeKind::Convex;
    throw std::invalid_argument("kind must be 'concave' or 'convex'");
}

}  // namespace

PYBIND11_MODULE(_lpenv, m) {
    m.doc() = "Sharp L^p triangle-inequality envelopes";

    py::class_<StepFunction>(m, "StepFunction")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("breakpoints"), py::arg("values"))
        .def_static("constant", &StepFunction::constant)
        .def_property_readonly("breakpoints", &StepFunction::breakpoints)
        .def_property_readonly("values", &StepFunction::values)
        .def("__call__", &StepFunction::operator())
        .def("__len__", &StepFunction::size)
        .def("__eq__", [](const StepFunction& a, const StepFunction& b) { return a == b; })
        .def("to_json", [](const StepFunction& f) { return to_json(f).dump(); })
        .def_static("from_json", [](const std::string& text) {
            try {
                return step_function_from_json(nlohmann::json::parse(text));
            } catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument(e.what());
            }
        })
        .def("__repr__", [](const StepFunction& f) { return "StepFunction(" + to_json(f).dump() + ")"; });

    m.def("regime", [](double p) { return std::string(to_string(exponent(p).regime())); }, py::arg("p"));

    m.def("eval_F", [](double p, double x, double y, double z) { return eval_F(exponent(p), triple(x, y, z)); },
          py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("eval_G", [](double p, double x, double y, double z) { return eval_G(exponent(p), triple(x, y, z)); },
          py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("upper_envelope",
          [](double p, double x, double y, double z) { return upper_envelope(exponent(p), triple(x, y, z)); },
          py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("lower_envelope",
          [](double p, double x, double y, double z) { return lower_envelope(exponent(p), triple(x, y, z)); },
          py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("carlen_bound",
          [](double p, double x, double y, double z) { return carlen_bound(exponent(p), triple(x, y, z)); },
          py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("two_point", [](double q, double x) {
        const auto s = two_point(q, x);
        return py::make_tuple(s.lhs, s.rhs);
    }, py::arg("q"), py::arg("x"));
    m.def("scalar_three_term", [](double a, double b, double p) {
        const auto s = scalar_three_term(a, b, exponent(p));
        return py::make_tuple(s.lhs, s.rhs);
    }, py::arg("a"), py::arg("b"), py::arg("p"));

    m.def("sum_power_norm", &sum_power_norm, py::arg("f"), py::arg("g"), py::arg("p"));
    m.def("triple_of_pair", [](const StepFunction& f, const StepFunction& g, double p) {
        const auto t = triple_of_pair(f, g, p);
        return py::make_tuple(t.x(), t.y(), t.z());
    }, py::arg("f"), py::arg("g"), py::arg("p"));
    m.def("bound_report", [](double p, const StepFunction& f, const StepFunction& g) {
        return report_dict(sum_and_report(f, g, exponent(p)));
    }, py::arg("p"), py::arg("f"), py::arg("g"));
    m.def("triple_report", [](double p, double x, double y, double z) {
        return report_dict(report_for_triple(exponent(p), triple(x, y, z)));
    }, py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("extremal", [](double p, double x, double y, double z, const std::string& which) {
        const auto e = exponent(p);
        const auto t = triple(x, y, z);
        if (which != "F" && which != "G") throw std::invalid_argument("which must be 'F' or 'G'");
        const auto pair = which == "F" ? extremal_F(e, t) : extremal_G(e, t);
        return py::make_tuple(pair.f, pair.g);
    }, py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("which") = "F");

    m.def("oracle_envelope", [](double p, double s, double z, const std::string& kind, int n) {
        const auto curve = BoundaryCurve::build(exponent(p), n);
        return oracle_envelope(curve, s, z, kind_of(kind));
    }, py::arg("p"), py::arg("s"), py::arg("z"), py::arg("kind") = "concave", py::arg("n") = 512);
    m.def("empirical_B", [](double p, double x, double y, double z, bool sup, int budget, std::uint64_t seed) {
        return empirical_B(exponent(p), triple(x, y, z), sup ? Extremum::Sup : Extremum::Inf, budget, seed);
    }, py::arg("p"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("sup") = true, py::arg("budget") = 200,
       py::arg("seed") = 7);

    m.def("torsion", [](double s, double p) { return analysis::torsion(s, exponent(p)); }, py::arg("s"),
          py::arg("p"));
    m.def("torsion_sign_changes", [](double p, int grid) {
        const auto r = analysis::torsion_sign_changes(exponent(p), grid);
        return py::make_tuple(r.count, r.location, std::string(analysis::to_string(r.direction)));
    }, py::arg("p"), py::arg("grid") = 256);

    m.def("verify_pairs", [](std::uint64_t seed, long long samples) {
        PairSuiteOptions options;
        options.seed = seed;
        options.samples = samples;
        SuiteReport report;
        {
            py::gil_scoped_release release;
            report = verify_pairs(options);
        }
        return suite_dict(report);
    }, py::arg("seed") = 7, py::arg("samples") = 10000);
    m.def("verify_sums", [](std::uint64_t seed, long long samples, bool p_neg) {
        SumSuiteOptions options;
        options.seed = seed;
        options.samples = samples;
        options.negative_counterexample = p_neg;
        return suite_dict(verify_sums(options));
    }, py::arg("seed") = 7, py::arg("samples") = 2000, py::arg("p_neg") = false);
    m.def("verify_analysis", [](int points) { return suite_dict(verify_analysis(points)); },
          py::arg("points") = 1000);
}
