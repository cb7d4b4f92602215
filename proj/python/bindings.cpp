#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "coartin/autiso.hpp"
#include "coartin/cli.hpp"
#include "coartin/json_io.hpp"

namespace py = pybind11;
using namespace coartin;

namespace {

CanonicalAlgebra build(int m, const std::vector<std::string>& gens, std::uint64_t p) {
    const FieldSpec F(p);
    std::vector<Poly> polys;
    for (const auto& g : gens) polys.push_back(parsePoly(g, F));
    return fromGenerators(F, m, polys);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact computations with co-artin subalgebras of K[x].";

    py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
    py::register_exception<InternalError>(mod, "InternalError", PyExc_RuntimeError);

    mod.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr).");

    mod.def(
        "enumerate_s",
        [](int m) {
            std::vector<std::vector<int>> out;
            for (const auto& g : enumerateS(m)) out.push_back(g.members());
            return out;
        },
        py::arg("m"));

    mod.def(
        "order_tables_json", [](int m, std::uint64_t p) {
            return toJson(orderTables(m, p == 0 ? std::nullopt : std::optional<std::uint64_t>(p))).dump();
        },
        py::arg("m"), py::arg("p") = 0);

    mod.def(
        "canonical_json", [](int m, const std::vector<std::string>& gens, std::uint64_t p) {
            return toJson(build(m, gens, p)).dump();
        },
        py::arg("m"), py::arg("gens"), py::arg("p") = 0);

    mod.def(
        "aut_json", [](int m, const std::vector<std::string>& gens, std::uint64_t p) {
            return toJson(autGroup(build(m, gens, p))).dump();
        },
        py::arg("m"), py::arg("gens"), py::arg("p") = 0);

    mod.def(
        "iso_json",
        [](int m, const std::vector<std::string>& a, const std::vector<std::string>& b, std::uint64_t p) {
            return toJson(isoTest(build(m, a, p), build(m, b, p)), FieldSpec(p)).dump();
        },
        py::arg("m"), py::arg("a"), py::arg("b"), py::arg("p") = 0);

    mod.def(
        "present_json",
        [](int m, const std::vector<std::string>& gens, const std::string& target, const std::string& style,
           std::uint64_t p) {
            return toJson(present(build(m, gens, p), parseTarget(target), parseStyle(style))).dump();
        },
        py::arg("m"), py::arg("gens"), py::arg("target") = "bar", py::arg("style") = "irredundant", py::arg("p") = 0);

    mod.def(
        "variety_json",
        [](int m, const std::vector<int>& gamma, std::uint64_t p) {
            return toJson(variety(Gamma(m, gamma), FieldSpec(p))).dump();
        },
        py::arg("m"), py::arg("gamma"), py::arg("p") = 0);
}
