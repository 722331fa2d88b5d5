#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fqdigraph/field.hpp"
#include "fqdigraph/funcspec.hpp"
#include "fqdigraph/monomial.hpp"
#include "fqdigraph/oracle.hpp"
#include "fqdigraph/theorem.hpp"
#include "fqdigraph/verify.hpp"
#include "fqdigraph/vertex.hpp"

namespace py = pybind11;
using namespace fqdigraph;

namespace {

std::pair<FieldCtx, FuncSpec> parse_instance_json(const std::string& text,
                                                  std::uint64_t q_cap) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("invalid JSON: ") + ex.what());
    }
    Instance inst = parse_instance(doc, q_cap);
    return {std::move(inst.field), std::move(inst.f)};
}

std::string to_dot(const DigraphExplicit& g) {
    std::ostringstream out;
    write_dot(g, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Strong components of algebraically defined digraphs D(q; f) "
              "over finite fields";
    m.attr("__version__") = "0.1.0";
    m.attr("DEFAULT_ARC_CAP") = kDefaultArcCap;
    m.attr("DEFAULT_COSET_CAP") = kDefaultCosetCap;
    m.attr("DEFAULT_Q_CAP") = FieldCtx::kDefaultQCap;

    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<SchemaError>(m, "SchemaError", err.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", err.ptr());

    py::class_<FieldCtx>(m, "Field",
                         "Arithmetic context for F_{p^e}; elements travel as "
                         "indices sum coeffs[i]*p^i in [0, q).")
        .def(py::init([](std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<coeff_t>> modulus,
                         std::uint64_t q_cap) {
                 return FieldCtx(p, e, std::move(modulus), q_cap);
             }),
             py::arg("p"), py::arg("e") = 1,
             py::arg("modulus") = std::nullopt,
             py::arg("q_cap") = FieldCtx::kDefaultQCap)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("e", &FieldCtx::e)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus",
                               [](const FieldCtx& F) { return F.modulus(); })
        .def("coeffs",
             [](const FieldCtx& F, elem_t a) { return F.elem(a).coeffs; },
             py::arg("a"), "Power-basis coefficients of the element index.")
        .def("index_of",
             [](const FieldCtx& F, std::vector<coeff_t> c) {
                 return F.index_of(FieldElem{std::move(c)});
             },
             py::arg("coeffs"))
        .def("add", py::overload_cast<elem_t, elem_t>(&FieldCtx::add, py::const_))
        .def("sub", py::overload_cast<elem_t, elem_t>(&FieldCtx::sub, py::const_))
        .def("neg", py::overload_cast<elem_t>(&FieldCtx::neg, py::const_))
        .def("mul", py::overload_cast<elem_t, elem_t>(&FieldCtx::mul, py::const_))
        .def("inv", py::overload_cast<elem_t>(&FieldCtx::inv, py::const_))
        .def("div", py::overload_cast<elem_t, elem_t>(&FieldCtx::div, py::const_))
        .def("pow",
             py::overload_cast<elem_t, std::int64_t>(&FieldCtx::pow, py::const_),
             py::arg("a"), py::arg("k"))
        .def("primitive_element", &FieldCtx::primitive_element)
        .def("log", &FieldCtx::log, py::arg("a"))
        .def("exp_of_primitive", &FieldCtx::exp_of_primitive, py::arg("k"))
        .def("subfield_elements", &FieldCtx::subfield_elements, py::arg("e_i"))
        .def("__repr__", [](const FieldCtx& F) {
            return "Field(p=" + std::to_string(F.p()) +
                   ", e=" + std::to_string(F.e()) + ")";
        });

    py::class_<Vertex>(m, "Vertex",
                       "Vertex of D(q; f): first coordinate plus l trailing "
                       "coordinates, all element indices.")
        .def(py::init([](elem_t first, std::vector<elem_t> rest) {
                 return Vertex{first, std::move(rest)};
             }),
             py::arg("first"), py::arg("rest") = std::vector<elem_t>{})
        .def_readwrite("first", &Vertex::first)
        .def_readwrite("rest", &Vertex::rest)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const Vertex& v) {
                 std::size_t h = std::hash<elem_t>{}(v.first);
                 for (elem_t c : v.rest)
                     h = h * 1000003u ^ std::hash<elem_t>{}(c);
                 return h;
             })
        .def("__repr__", [](const Vertex& v) {
            std::string s = "Vertex(" + std::to_string(v.first) + ", [";
            for (std::size_t i = 0; i < v.rest.size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(v.rest[i]);
            }
            return s + "])";
        });

    m.def("vertex_index", &vertex_index, py::arg("field"), py::arg("v"));
    m.def("vertex_from_index", &vertex_from_index, py::arg("field"),
          py::arg("l"), py::arg("index"));

    py::enum_<FuncForm>(m, "FuncForm")
        .value("Table", FuncForm::Table)
        .value("Poly", FuncForm::Poly)
        .value("Monomial", FuncForm::Monomial);

    py::class_<FuncSpec>(m, "FuncSpec",
                         "Defining function f: F_q x F_q -> F_q^l.")
        .def_readonly("form", &FuncSpec::form)
        .def_readonly("l", &FuncSpec::l)
        .def_readonly("table", &FuncSpec::table)
        .def_readonly("coeffs", &FuncSpec::coeffs)
        .def_readonly("m", &FuncSpec::m)
        .def_readonly("n", &FuncSpec::n);

    m.def("make_table_funcspec", &make_table_funcspec, py::arg("field"),
          py::arg("rows"));
    m.def("make_poly_funcspec", &make_poly_funcspec, py::arg("field"),
          py::arg("grids"));
    m.def("make_monomial_funcspec", &make_monomial_funcspec, py::arg("field"),
          py::arg("m"), py::arg("n"));
    m.def("parse_instance_json", &parse_instance_json, py::arg("text"),
          py::arg("q_cap") = FieldCtx::kDefaultQCap,
          "Parses an instance document; returns (Field, FuncSpec).");
    m.def("eval_f",
          py::overload_cast<const FieldCtx&, const FuncSpec&, elem_t, elem_t>(
              &eval_f),
          py::arg("field"), py::arg("f"), py::arg("x"), py::arg("y"));
    m.def("interpolate", &interpolate, py::arg("field"), py::arg("f"));

    py::class_<DerivedFuncs>(m, "DerivedFuncs",
                             "f(0,0), g, h and the doubly-reduced table.")
        .def_readonly("l", &DerivedFuncs::l)
        .def_readonly("f00", &DerivedFuncs::f00)
        .def_readonly("g", &DerivedFuncs::g)
        .def_readonly("h", &DerivedFuncs::h)
        .def_readonly("f_table", &DerivedFuncs::f_table)
        .def_readonly("tilde_f0", &DerivedFuncs::tilde_f0);

    m.def("derive", &derive, py::arg("field"), py::arg("f"));

    py::enum_<Parity>(m, "Parity")
        .value("Odd", Parity::Odd)
        .value("Even", Parity::Even);

    py::class_<ComponentStructure>(m, "ComponentStructure",
                                   "Closed-form strong-component structure "
                                   "of D(q; f).")
        .def_readonly("parity", &ComponentStructure::parity)
        .def_readonly("d", &ComponentStructure::d)
        .def_readonly("el", &ComponentStructure::el)
        .def_readonly("f00_in_W0", &ComponentStructure::f00_in_W0)
        .def_readonly("strong", &ComponentStructure::strong)
        .def_readonly("count", &ComponentStructure::count)
        .def_readonly("orders", &ComponentStructure::orders)
        .def_property_readonly(
            "W0_basis",
            [](const ComponentStructure& s) { return s.W0.basis(); })
        .def_property_readonly(
            "W_basis",
            [](const ComponentStructure& s) { return s.W.basis(); });

    py::class_<ComponentDescriptor>(m, "ComponentDescriptor",
                                    "Canonical coset labels of one strong "
                                    "component.")
        .def_readonly("parity", &ComponentDescriptor::parity)
        .def_readonly("half_a", &ComponentDescriptor::half_a)
        .def_readonly("half_b", &ComponentDescriptor::half_b)
        .def_readonly("degenerate", &ComponentDescriptor::degenerate)
        .def("key", &ComponentDescriptor::key);

    py::class_<Analysis>(m, "Analysis",
                         "Derived tables plus component structure, shared by "
                         "the per-vertex operations.")
        .def_readonly("derived", &Analysis::derived)
        .def_readonly("structure", &Analysis::structure);

    m.def("analyze", &analyze, py::arg("field"), py::arg("f"),
          py::call_guard<py::gil_scoped_release>());
    m.def("analyze_full", &analyze_full, py::arg("field"), py::arg("f"),
          py::call_guard<py::gil_scoped_release>());
    m.def("component_of",
          py::overload_cast<const FieldCtx&, const Analysis&, const Vertex&>(
              &component_of),
          py::arg("field"), py::arg("analysis"), py::arg("v"));
    m.def("same_component",
          py::overload_cast<const FieldCtx&, const Analysis&, const Vertex&,
                            const Vertex&>(&same_component),
          py::arg("field"), py::arg("analysis"), py::arg("u"), py::arg("v"));
    m.def("materialize", &materialize, py::arg("field"), py::arg("analysis"),
          py::arg("desc"), py::arg("cap") = kDefaultCosetCap);
    m.def("phi_map", &phi_map, py::arg("field"), py::arg("analysis"),
          py::arg("v"));
    m.def("phi_inv", &phi_inv, py::arg("field"), py::arg("analysis"),
          py::arg("v"));
    m.def("psi_map", &psi_map, py::arg("field"), py::arg("analysis"),
          py::arg("desc1"), py::arg("desc2"), py::arg("v"));
    m.def("witness_path",
          py::overload_cast<const FieldCtx&, const Analysis&, const Vertex&,
                            const Vertex&>(&witness_path),
          py::arg("field"), py::arg("analysis"), py::arg("from_v"),
          py::arg("to_v"));
    m.def("theorem_partition", &theorem_partition, py::arg("field"),
          py::arg("analysis"), py::arg("vertex_cap") = kDefaultCosetCap,
          py::call_guard<py::gil_scoped_release>());

    py::class_<DigraphExplicit>(m, "DigraphExplicit",
                                "Materialized digraph; heads[v*q + k] is the "
                                "k-th out-neighbor of v.")
        .def_readonly("n", &DigraphExplicit::n)
        .def_readonly("q", &DigraphExplicit::q)
        .def_readonly("l", &DigraphExplicit::l)
        .def_readonly("heads", &DigraphExplicit::heads);

    m.def("is_arc", &is_arc, py::arg("field"), py::arg("f"), py::arg("tail"),
          py::arg("head"));
    m.def("out_neighbors", &out_neighbors, py::arg("field"), py::arg("f"),
          py::arg("v"));
    m.def("build_explicit", &build_explicit, py::arg("field"), py::arg("f"),
          py::arg("arc_cap") = kDefaultArcCap,
          py::call_guard<py::gil_scoped_release>());
    m.def("scc", &scc, py::arg("g"),
          py::call_guard<py::gil_scoped_release>());
    m.def("diameter", &diameter, py::arg("g"),
          py::call_guard<py::gil_scoped_release>());
    m.def("to_dot", &to_dot, py::arg("g"));

    py::class_<PartitionReport>(m, "PartitionReport")
        .def_readonly("ok", &PartitionReport::ok)
        .def_readonly("first", &PartitionReport::first)
        .def_readonly("second", &PartitionReport::second)
        .def_readonly("detail", &PartitionReport::detail);

    m.def("compare_partitions", &compare_partitions, py::arg("a"),
          py::arg("b"));

    py::class_<MonomialStructure>(m, "MonomialStructure",
                                  "Strong-component structure of D(q; m, n) "
                                  "from integer arithmetic alone.")
        .def_readonly("p", &MonomialStructure::p)
        .def_readonly("e", &MonomialStructure::e)
        .def_readonly("q", &MonomialStructure::q)
        .def_readonly("m", &MonomialStructure::m)
        .def_readonly("n", &MonomialStructure::n)
        .def_readonly("d", &MonomialStructure::d)
        .def_readonly("divisors", &MonomialStructure::divisors)
        .def_readonly("q_s", &MonomialStructure::q_s)
        .def_readonly("e_s", &MonomialStructure::e_s)
        .def_readonly("strong", &MonomialStructure::strong)
        .def_readonly("count", &MonomialStructure::count)
        .def_readonly("orders", &MonomialStructure::orders);

    py::class_<PowerSubgroup>(m, "PowerSubgroup",
                              "A_k = {x^k : x in F_q*}, enumerated.")
        .def_readonly("k", &PowerSubgroup::k)
        .def_readonly("kbar", &PowerSubgroup::kbar)
        .def_readonly("elements", &PowerSubgroup::elements);

    py::class_<SubgroupCheck>(m, "SubgroupCheck")
        .def_readonly("name", &SubgroupCheck::name)
        .def_readonly("pass_", &SubgroupCheck::pass)
        .def_readonly("left_size", &SubgroupCheck::left_size)
        .def_readonly("right_size", &SubgroupCheck::right_size);

    py::class_<SubgroupReport>(m, "SubgroupReport")
        .def_readonly("checks", &SubgroupReport::checks)
        .def_readonly("all_pass", &SubgroupReport::all_pass);

    m.def("analyze_monomial", &analyze_monomial, py::arg("p"), py::arg("e"),
          py::arg("m"), py::arg("n"));
    m.def("monomial_component_of", &monomial_component_of, py::arg("field"),
          py::arg("m"), py::arg("n"), py::arg("v"),
          py::arg("cap") = kDefaultCosetCap);
    m.def("power_subgroup", &power_subgroup, py::arg("field"), py::arg("k"));
    m.def("subgroup_checks", &subgroup_checks, py::arg("field"), py::arg("m"),
          py::arg("n"));

    py::class_<VerifyCase>(m, "VerifyCase",
                           "One comparison of predicted against explicit "
                           "strong components.")
        .def_readonly("p", &VerifyCase::p)
        .def_readonly("e", &VerifyCase::e)
        .def_readonly("l", &VerifyCase::l)
        .def_readonly("q", &VerifyCase::q)
        .def_readonly("seed", &VerifyCase::seed)
        .def_readonly("random", &VerifyCase::random)
        .def_readonly("ok", &VerifyCase::ok)
        .def_readonly("components", &VerifyCase::components)
        .def_readonly("detail", &VerifyCase::detail);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("fields", &SweepSpec::fields)
        .def_readwrite("ls", &SweepSpec::ls)
        .def_readwrite("per", &SweepSpec::per)
        .def_readwrite("seed", &SweepSpec::seed);

    m.def("make_random_table", &make_random_table, py::arg("field"),
          py::arg("l"), py::arg("seed"));
    m.def("verify_case", &verify_case, py::arg("field"), py::arg("f"),
          py::arg("arc_cap") = kDefaultArcCap,
          py::arg("vertex_cap") = kDefaultCosetCap, py::arg("seed") = 0,
          py::arg("random") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("case_seed", &case_seed, py::arg("master"), py::arg("q"),
          py::arg("l"), py::arg("i"));
    m.def("run_sweep", &run_sweep, py::arg("spec"),
          py::arg("arc_cap") = kDefaultArcCap,
          py::arg("vertex_cap") = kDefaultCosetCap, py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
}
