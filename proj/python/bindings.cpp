#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "gsq/coloring.hpp"
#include "gsq/configurations.hpp"
#include "gsq/discharging.hpp"
#include "gsq/error.hpp"
#include "gsq/extremal.hpp"
#include "gsq/graph_io.hpp"
#include "gsq/mad.hpp"
#include "gsq/rules_format.hpp"

namespace py = pybind11;
using namespace gsq;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.numerator(), r.denominator());
}

py::list fractions(const std::vector<Rational>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(fraction(x));
    return out;
}

Theorem theorem_named(const std::string& name) {
    const auto t = parse_theorem(name);
    if (!t) throw PreconditionError("unknown theorem '" + name + "'");
    return *t;
}

RuleSet ruleset(const std::string& theorem, std::optional<int> k) {
    return builtin_ruleset(theorem_named(theorem), k);
}

py::dict recipe_dict(const ConstructionRecipe& r) {
    py::dict d;
    d["kind"] = to_string(r.kind);
    d["k"] = r.k;
    d["M"] = r.M;
    d["seed"] = r.seed;
    d["contracted"] = r.contracted;
    d["untight"] = r.untight;
    d["log"] = r.log;
    return d;
}

py::dict instance_dict(const ConfigurationInstance& inst) {
    py::dict d;
    d["kind"] = to_string(inst.kind);
    d["roles"] = inst.roles;
    if (inst.pattern) d["pattern"] = inst.pattern->id;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gsquare, m) {
    m.doc() = "List coloring of squares of sparse graphs";

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
    static py::exception<GuardError> guard_error(m, "GuardError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(parse_error)(e.what());
            exc.attr("line") = e.line();
            exc.attr("column") = e.column();
            PyErr_SetObject(parse_error.ptr(), exc.ptr());
        } catch (const GuardError& e) {
            guard_error(e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            const auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("adjacent", &Graph::adjacent)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("path", &graphs::path);
    m.def("cycle", &graphs::cycle);
    m.def("complete", &graphs::complete);
    m.def("petersen", &graphs::petersen);
    m.def("square", &square);
    m.def("girth", &girth);

    m.def("parse_graph", [](const std::string& text) {
        auto f = parse_graph(text);
        return py::make_tuple(f.graph, f.header);
    });
    m.def("format_graph", [](const Graph& g, const std::vector<std::string>& header) {
        return format_graph({g, header});
    }, py::arg("graph"), py::arg("header") = std::vector<std::string>{});

    m.def("mad", [](const Graph& g) {
        const auto r = mad_exact(g);
        return py::make_tuple(fraction(r.mad), r.certificate.subset);
    }, "Exact maximum average degree and a densest vertex subset.");
    m.def("average_degree", [](const Graph& g) { return fraction(average_degree(g)); });
    m.def("main_threshold", [](int d) { return fraction(main_threshold(d)); });
    m.def("mad_threshold", [](int d) { return fraction(mad_threshold(d)); });
    m.def("min_girth_for_delta", &min_girth_for_delta);

    m.def("chromatic_number", &chromatic_number);
    m.def("is_choosable", &is_choosable, py::arg("graph"), py::arg("k"));
    m.def("list_color", [](const Graph& g, const std::vector<std::vector<Color>>& lists) -> py::object {
        const auto r = list_color(g, ListAssignment(lists));
        if (!r.satisfiable()) return py::none();
        std::vector<Color> out;
        for (const auto& c : r.coloring->colors) out.push_back(*c);
        return py::cast(out);
    }, "A proper coloring from the lists, or None.");

    m.def("detect", [](const Graph& g, int k, bool relaxed) {
        py::list out;
        for (const auto& inst : detect_all(g, k, relaxed ? DetectScope::relaxed : DetectScope::lemma))
            out.append(instance_dict(inst));
        return out;
    }, py::arg("graph"), py::arg("k"), py::arg("relaxed") = false);
    m.def("detect_local", [](const Graph& g, const std::string& theorem, std::optional<int> k) {
        py::list out;
        for (const auto& inst : detect_local(g, ruleset(theorem, k))) out.append(instance_dict(inst));
        return out;
    }, py::arg("graph"), py::arg("theorem"), py::arg("k") = py::none());

    py::class_<RuleSet>(m, "RuleSet")
        .def_property_readonly("k", [](const RuleSet& r) { return r.k; })
        .def_property_readonly("theorem", [](const RuleSet& r) { return to_string(r.theorem); })
        .def_property_readonly("threshold", [](const RuleSet& r) { return fraction(r.threshold); })
        .def(py::self == py::self);
    m.def("builtin_ruleset", &ruleset, py::arg("theorem"), py::arg("k") = py::none());
    m.def("load_rules", [](const std::string& path, int k) { return compile_rules(load_rules_file(path), k); },
          py::arg("path"), py::arg("k"));
    m.def("parse_rules", [](const std::string& text, int k) { return compile_rules(parse_rules(text), k); },
          py::arg("text"), py::arg("k"));
    m.def("roundtrip_rules", [](const std::string& text) { return serialize_rules(parse_rules(text)); },
          "Canonical text of a rules document.");

    m.def("verify", [](const Graph& g, const RuleSet& rules) {
        const auto r = verify(g, rules);
        py::dict d;
        d["passed"] = r.pass;
        d["threshold"] = fraction(r.threshold);
        d["min_charge"] = r.min_charge ? fraction(*r.min_charge) : py::none();
        d["final_charge"] = fractions(r.ledger.final_charge);
        d["deficient"] = r.deficient.size();
        return d;
    });
    m.def("discharge_report", [](const Graph& g, const RuleSet& rules, const std::string& format) {
        if (format != "text" && format != "tsv") throw PreconditionError("format must be text or tsv");
        return format_report(g, rules, verify(g, rules), format == "tsv" ? ReportFormat::tsv : ReportFormat::text);
    }, py::arg("graph"), py::arg("rules"), py::arg("format") = "text");

    m.def("example1", [](int k, std::uint64_t seed, bool contracted, bool untight) {
        const auto c = example1(k, seed, contracted, untight);
        return py::make_tuple(c.graph, recipe_dict(c.recipe));
    }, py::arg("k"), py::arg("seed") = 1, py::arg("contracted") = false, py::arg("untight") = false);
    m.def("example2", [](int k, int M, std::uint64_t seed, bool contracted) {
        const auto c = example2(k, M, seed, contracted);
        return py::make_tuple(c.graph, recipe_dict(c.recipe));
    }, py::arg("k"), py::arg("M"), py::arg("seed") = 1, py::arg("contracted") = false);
}
