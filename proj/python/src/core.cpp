#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ostrowski/catalog.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/expr.hpp"
#include "ostrowski/harness.hpp"
#include "ostrowski/io.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/supnorm.hpp"
#include "ostrowski/weighted.hpp"

namespace py = pybind11;
using namespace ostrowski;

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::dict& d) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(d).cast<std::string>());
}

py::dict sup_dict(const SupEstimate& s) { return to_py(to_json(s)).cast<py::dict>(); }

RunConfig config_of(std::uint64_t seed, double rel_tol, std::size_t grid, unsigned jobs) {
    RunConfig c;
    c.seed = seed;
    c.rel_tol = rel_tol;
    c.grid = grid;
    c.jobs = jobs;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ostrowski-type bounds: expressions, means, seminorms and bound checks";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NondifferentiableError>(m, "NondifferentiableError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    py::class_<FunctionSpec>(m, "FunctionSpec")
        .def(py::init([](const std::string& text) { return FunctionSpec::parse(text); }), py::arg("text"))
        .def("eval", &FunctionSpec::eval, py::arg("t"))
        .def("__call__", &FunctionSpec::eval, py::arg("t"))
        .def("derivative", &FunctionSpec::derivative, py::arg("t"))
        .def("serialize", &FunctionSpec::serialize)
        .def_property_readonly("source", &FunctionSpec::source_text)
        .def("__repr__", [](const FunctionSpec& f) { return "FunctionSpec(" + f.serialize() + ")"; });

    m.def("parse", [](const std::string& text) { return FunctionSpec::parse(text); }, py::arg("text"));

    m.def(
        "mean",
        [](const std::string& kind, double x, double y, double p) {
            return evaluate_mean(MeanKind::from_name(kind, p), x, y);
        },
        py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("p") = 1.0);

    m.def(
        "integrate",
        [](const std::string& f, double a, double b, double rel_tol) {
            const QuadResult r = integrate(FunctionSpec::parse(f), a, b, rel_tol);
            return py::make_tuple(r.value, r.err_estimate);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("rel_tol") = 1e-12);

    m.def("kink_points",
          [](const std::string& f, double a, double b) { return kink_points(FunctionSpec::parse(f), a, b); },
          py::arg("f"), py::arg("a"), py::arg("b"));

    m.def(
        "sup_ratio",
        [](const std::string& f, const std::string& g, double a, double b, std::size_t grid) {
            return sup_dict(sup_ratio(FunctionSpec::parse(f), FunctionSpec::parse(g), Interval(a, b), grid));
        },
        py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"), py::arg("grid") = kDefaultSupGrid);

    m.def(
        "sup_abs_derivative",
        [](const std::string& f, double a, double b, std::size_t grid) {
            return sup_dict(sup_abs_derivative(FunctionSpec::parse(f), Interval(a, b), grid));
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("grid") = kDefaultSupGrid);

    m.def(
        "weight_median",
        [](const std::string& w, double a, double b, double tol) {
            return find_weight_median(WeightSpec(FunctionSpec::parse(w), Interval(a, b)), tol);
        },
        py::arg("w"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-13);

    m.def("bound_ids", &bound_ids);

    // case keys as in suite records
    m.def(
        "check",
        [](const py::dict& record, std::uint64_t seed, double rel_tol, std::size_t grid) {
            const CaseSpec c = case_from_json(from_py(record));
            py::list out;
            for (const CaseResult& r : check_case(c, config_of(seed, rel_tol, grid, 1))) out.append(to_py(to_json(r)));
            return out;
        },
        py::arg("record"), py::arg("seed") = 42, py::arg("rel_tol") = 1e-13, py::arg("grid") = kDefaultSupGrid);

    m.def(
        "verify",
        [](const std::string& jsonl, std::uint64_t seed, double rel_tol, std::size_t grid, unsigned jobs) {
            std::istringstream in(jsonl);
            const std::vector<CaseSpec> cases = read_suite(in);
            const RunConfig config = config_of(seed, rel_tol, grid, jobs);
            SuiteResult suite;
            {
                py::gil_scoped_release release;
                suite = run_suite(cases, config);
            }
            return to_py(suite_report(suite, config));
        },
        py::arg("jsonl"), py::arg("seed") = 42, py::arg("rel_tol") = 1e-13, py::arg("grid") = kDefaultSupGrid,
        py::arg("jobs") = 1);

    m.def("consistency", [](double tol) {
        const ConsistencyResult r = consistency_suite(tol);
        py::dict d;
        d["total"] = r.summary.total;
        d["passed"] = r.summary.passed;
        d["max_rel_error"] = r.max_rel_error;
        return d;
    }, py::arg("tol") = 1e-8);
}
