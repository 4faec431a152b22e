#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alba/oracle.hpp"
#include "alba/parser.hpp"
#include "alba/trace_json.hpp"

namespace py = pybind11;
using namespace alba;

namespace {

// A bare formula is read as T <= f, as on the command line.
Inequality read_inequality(const std::string& text) {
    auto v = parse(text);
    if (auto* q = std::get_if<Inequality>(&v)) return *q;
    return {mk::top(), std::get<Formula>(v)};
}

AlbaResult run_with(const Inequality& q, const std::optional<std::string>& order, bool simplify) {
    AlbaOptions opts{simplify};
    if (!order || order->empty() || *order == "auto") return run_alba_auto(q, opts);
    return run_alba(q, OrderType::parse(order_variables(q), *order), opts);
}

py::dict parse_py(const std::string& text) {
    py::dict d;
    auto v = parse(text);
    if (auto* q = std::get_if<Inequality>(&v)) {
        d["kind"] = "inequality";
        d["ascii"] = to_string(*q);
        d["unicode"] = to_string(*q, Notation::Unicode);
    } else {
        const auto& f = std::get<Formula>(v);
        d["kind"] = "formula";
        d["ascii"] = to_string(f);
        d["unicode"] = to_string(f, Notation::Unicode);
    }
    return d;
}

std::string translate_py(const std::string& text, bool closed) {
    fol::FOFormula f = fol::st_statement(parse_statement(text));
    if (closed) f = fol::universal_closure(f);
    return fol::to_string(f);
}

py::dict verify_py(const std::string& text, int max_worlds, const std::optional<std::string>& order,
                   unsigned threads) {
    if (max_worlds < 1 || max_worlds > oracle::kMaxEnumeratedWorlds)
        throw std::invalid_argument("max_worlds must be between 1 and 5");
    const Inequality q = read_inequality(text);
    AlbaResult r = run_with(q, order, false);
    py::dict d;
    d["success"] = r.success();
    d["order_type"] = r.epsilon.to_string();
    if (!r.success()) return d;
    oracle::Verdict v;
    {
        py::gil_scoped_release release;
        v = oracle::check_correspondence(q, *r.fo, max_worlds, threads);
    }
    d["equivalent"] = v.equivalent();
    d["frames"] = v.checked;
    d["fo"] = fol::to_string(*r.fo);
    if (v.frame) d["counterexample"] = format_frame(*v.frame);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Correspondence for hybrid logic with binder";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse", &parse_py, py::arg("text"));
    m.def(
        "classify_json", [](const std::string& text) { return classification_json(read_inequality(text)).dump(); },
        py::arg("text"));
    m.def(
        "run_json",
        [](const std::string& text, const std::optional<std::string>& order, bool simplify) {
            return to_json(run_with(read_inequality(text), order, simplify)).dump();
        },
        py::arg("text"), py::arg("order_type") = py::none(), py::arg("simplify") = false);
    m.def("translate", &translate_py, py::arg("text"), py::arg("closed") = false);
    m.def("verify", &verify_py, py::arg("text"), py::arg("max_worlds") = 3, py::arg("order_type") = py::none(),
          py::arg("threads") = 0U);
}
