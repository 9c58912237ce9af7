// Copyright 2026 The lcsmbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsmbqc/verify.hpp"

namespace py = pybind11;
using namespace lcsmbqc;

namespace {

// Reports cross the boundary as plain dicts.
py::object to_py(const json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json from_py(const py::object &o) {
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact measurement-operator groups, MBQC on GHZ states and linear constraint systems";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Phase>(m, "Phase", "Root of unity exp(2 pi i e / p^M), stored canonically.")
        .def(py::init<int64_t, int, int64_t>(), py::arg("p"), py::arg("M"), py::arg("e"))
        .def_static("one", &Phase::one, py::arg("p"))
        .def_static("omega", &Phase::omega, py::arg("p"), py::arg("c") = 1)
        .def_property_readonly("p", &Phase::p)
        .def_property_readonly("level", &Phase::level)
        .def_property_readonly("num", &Phase::num)
        .def("inverse", &Phase::inverse)
        .def("as_omega_power", &Phase::as_omega_power)
        .def("__pow__", [](const Phase &x, int64_t k) { return x.pow(k); })
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const Phase &x) { return py::hash(py::make_tuple(x.p(), x.level(), x.num())); })
        .def("__str__", &Phase::str)
        .def("__repr__", [](const Phase &x) { return "Phase(" + x.str() + ")"; });

    py::class_<PhaseFunction>(m, "PhaseFunction", "Value table q -> xi(q) over Z_p.")
        .def(py::init<int64_t, std::vector<Phase>>(), py::arg("p"), py::arg("values"))
        .def_static("identity", &PhaseFunction::identity, py::arg("p"))
        .def_static(
            "omega_poly",
            [](int64_t p, const std::vector<int64_t> &coeffs) { return PhaseFunction::omega_poly(p, coeffs); },
            py::arg("p"), py::arg("coeffs"))
        .def_readonly("p", &PhaseFunction::p)
        .def_readonly("values", &PhaseFunction::values)
        .def("__call__", &PhaseFunction::operator(), py::arg("q"))
        .def(py::self == py::self)
        .def("__repr__", [](const PhaseFunction &x) { return to_json(x).dump(); });

    m.def("pf_det", &pf_det);
    m.def("pf_level", &pf_level);
    m.def(
        "pf_decompose", [](const PhaseFunction &x, int level) { return pf_decompose(x, level).theta; },
        py::arg("xi"), py::arg("m"), "Level coefficients theta[j-1][a].");
    m.def(
        "pf_reconstruct",
        [](int64_t p, int level, const std::vector<std::vector<int64_t>> &theta) {
            return pf_reconstruct(level_coefficients_from_json(json{{"p", p}, {"m", level}, {"theta", theta}}));
        },
        py::arg("p"), py::arg("m"), py::arg("theta"));

    py::class_<KElement>(m, "KElement", "Single-site element (xi, b) = S_xi X^b.")
        .def(py::init<PhaseFunction, int64_t, int>(), py::arg("xi"), py::arg("b"), py::arg("m"))
        .def_static("identity", &KElement::identity, py::arg("p"), py::arg("m"))
        .def_static("X", &KElement::X, py::arg("p"), py::arg("m"))
        .def_static("Z", &KElement::Z, py::arg("p"), py::arg("m"))
        .def_static("scalar", &KElement::scalar, py::arg("p"), py::arg("m"), py::arg("c"))
        .def_readonly("xi", &KElement::xi)
        .def_readonly("b", &KElement::b)
        .def_readonly("m", &KElement::m)
        .def("inverse", &k_inv)
        .def("is_identity", &KElement::is_identity)
        .def("is_p_torsion", &k_is_p_torsion)
        .def("__mul__", &k_mul)
        .def("__pow__", &k_pow)
        .def(py::self == py::self)
        .def("__str__", &KElement::str)
        .def("__repr__", [](const KElement &x) { return "KElement" + x.str(); });

    m.def("k_commutator", &k_commutator);
    m.def("k_scalar_commutant", &k_scalar_commutant);
    m.def("k_enumerate", &k_enumerate, py::arg("p"), py::arg("m"), py::arg("budget") = kDefaultBudget);
    m.def(
        "k_maximal_p_torsion_abelian",
        [](int64_t p, int level, int64_t budget) { return to_py(to_json(k_maximal_p_torsion_abelian(p, level, budget))); },
        py::arg("p"), py::arg("m"), py::arg("budget") = kDefaultBudget);
    m.def("k_dihedral_check", [](int level) { return to_py(to_json(k_dihedral_check(level))); }, py::arg("m"));

    py::class_<TensorElement>(m, "TensorElement", "global * (M_1 x ... x M_n).")
        .def(py::init<Phase, std::vector<KElement>>(), py::arg("global_phase"), py::arg("sites"))
        .def_static("identity", &TensorElement::identity, py::arg("p"), py::arg("m"), py::arg("n"))
        .def_static("scalar", &TensorElement::scalar, py::arg("p"), py::arg("m"), py::arg("n"), py::arg("c"))
        .def_readonly("global_phase", &TensorElement::global)
        .def_readonly("sites", &TensorElement::sites)
        .def_property_readonly("n", &TensorElement::n)
        .def("inverse", &t_inv)
        .def("is_p_torsion", &t_is_p_torsion)
        .def("commutes_with", &t_commute)
        .def("commutator_exponent", &t_commutator_exponent)
        .def(
            "symplectic_vector",
            [](const TensorElement &E) {
                auto v = t_symplectic_vector(E);
                return py::make_tuple(v.fbar, v.bbar);
            },
            "(fbar, bbar)")
        .def("__mul__", &t_mul)
        .def("__pow__", &t_pow)
        .def(py::self == py::self)
        .def("__str__", &TensorElement::str)
        .def("__repr__", [](const TensorElement &x) { return "TensorElement(" + x.str() + ")"; })
        .def("to_json", [](const TensorElement &x) { return to_py(to_json(x)); })
        .def_static(
            "from_json", [](const py::object &o, int level) { return tensor_from_json(from_py(o), level); },
            py::arg("data"), py::arg("default_m") = 2);

    py::class_<HWElement>(m, "HWElement", "w^c Z^a X^b on n qudits.")
        .def(py::init<int64_t, Phase, std::vector<int64_t>, std::vector<int64_t>>(), py::arg("p"), py::arg("c"),
             py::arg("a"), py::arg("b"))
        .def_readonly("p", &HWElement::p)
        .def_readonly("c", &HWElement::c)
        .def_readonly("a", &HWElement::a)
        .def_readonly("b", &HWElement::b)
        .def("is_identity", &HWElement::is_identity)
        .def("__mul__", &hw_mul)
        .def("__pow__", &hw_pow)
        .def(py::self == py::self)
        .def("__str__", &HWElement::str)
        .def("__repr__", [](const HWElement &x) { return "HWElement(" + x.str() + ")"; });

    m.def("hw_commutator", &hw_commutator);
    m.def("value_map_nu", &value_map_nu);
    m.def(
        "phi",
        [](const TensorElement &E, const std::string &variant) { return phi(E, parse_phi_variant(variant)); },
        py::arg("E"), py::arg("variant") = "proof");
    m.def("even_prime_counterexample", [] { return to_py(to_json(even_prime_counterexample())); });

    py::class_<MbqcSpec>(m, "MbqcSpec")
        .def_readonly("p", &MbqcSpec::p)
        .def_readonly("m", &MbqcSpec::m)
        .def_readonly("n_inputs", &MbqcSpec::n_inputs)
        .def("to_json", [](const MbqcSpec &x) { return to_py(to_json(x)); })
        .def_static("from_json", [](const py::object &o) { return mbqc_spec_from_json(from_py(o)); });
    m.def("qudit_star_spec", &qudit_star_spec, py::arg("p"));
    m.def("qubit_star_spec", &qubit_star_spec);
    m.def("mbqc_operator", &mbqc_operator, py::arg("spec"), py::arg("input"));
    m.def("output_table", [](const MbqcSpec &s) { return to_py(to_json(output_table(s))); }, py::arg("spec"));
    m.def(
        "contextuality_degree", [](const MbqcSpec &s) { return contextuality_witness(output_table(s)).degree; },
        py::arg("spec"));
    m.def("mbqc_family_report", [](const MbqcSpec &s) { return to_py(to_json(mbqc_family_report(s))); });

    py::class_<LCS>(m, "LCS", "A x = b over Z_d.")
        .def(py::init<int64_t, std::vector<std::vector<int64_t>>, std::vector<int64_t>, std::optional<size_t>>(),
             py::arg("d"), py::arg("A"), py::arg("b"), py::arg("n_vars") = py::none())
        .def_readonly("d", &LCS::d)
        .def_readonly("A", &LCS::A)
        .def_readonly("b", &LCS::b)
        .def_property_readonly("rows", &LCS::rows)
        .def_property_readonly("cols", &LCS::cols)
        .def(py::self == py::self);

    py::class_<GeneratorAssignment>(m, "GeneratorAssignment")
        .def(py::init<std::vector<TensorElement>>(), py::arg("g"))
        .def_readonly("g", &GeneratorAssignment::g)
        .def_readonly("J", &GeneratorAssignment::J);

    m.def("solve_classical", &solve_classical);
    m.def("check_classical", &check_classical);
    m.def("check_solution_conditions",
          [](const LCS &s, const GeneratorAssignment &g) { return to_py(to_json(check_solution_conditions(s, g))); });
    m.def("reduce_to_classical",
          [](const LCS &s, const GeneratorAssignment &g) { return to_py(to_json(reduce_to_classical(s, g))); });
    m.def("lcs_from_mbqc", [](const MbqcSpec &spec) { return lcs_from_mbqc(spec, output_table(spec)); });
    m.def("relation_lcs", &relation_lcs, py::arg("gens"), py::arg("budget") = kDefaultBudget);
    m.def("classical_lift", &classical_lift, py::arg("x"), py::arg("p"), py::arg("m"), py::arg("n_sites"));
    m.def("mermin_fixtures", [] {
        auto fx = mermin_fixtures();
        return py::make_tuple(fx.square, fx.square_assignment, fx.star);
    });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string &suite, int64_t p, int level, size_t n, const std::string &variant, int64_t budget,
           uint64_t seed, int64_t samples) {
            VerifyConfig cfg;
            cfg.p = p;
            cfg.m = level;
            cfg.n = n;
            cfg.variant = parse_phi_variant(variant);
            cfg.budget = budget;
            cfg.seed = seed;
            cfg.samples = samples;
            SuiteReport rep;
            {
                py::gil_scoped_release release;
                rep = run_suite(suite, cfg);
            }
            return to_py(to_json(rep));
        },
        py::arg("suite"), py::arg("p") = 3, py::arg("m") = 2, py::arg("n") = 2, py::arg("variant") = "proof",
        py::arg("budget") = kDefaultBudget, py::arg("seed") = 1, py::arg("samples") = 10000);
}
