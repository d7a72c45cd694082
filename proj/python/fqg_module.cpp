#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqg/coidalgebra.hpp"
#include "fqg/io.hpp"
#include "fqg/lattice.hpp"
#include "fqg/models.hpp"
#include "fqg/presubgroup.hpp"

namespace py = pybind11;
using namespace fqg;

namespace {

// pybind11 cannot hold a shared_ptr-to-const directly; a thin handle keeps
// the immutable QuantumGroup alive on the Python side.
struct QG {
  QGPtr p;
};

}  // namespace

PYBIND11_MODULE(_fqg, m) {
  m.doc() = "finite quantum groups: Haar structure, idempotent states, lattices";

  // Translators run newest-first, so the subclass must be registered last.
  py::register_exception<Error>(m, "FqgError");
  py::register_exception<SchemaError>(m, "SchemaError");

  py::class_<Element>(m, "Element")
      .def_property_readonly("coords", [](const Element& e) { return Vec(e.coords()); })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("adjoint", &Element::adjoint);

  py::class_<Functional>(m, "Functional")
      .def_property_readonly("values", [](const Functional& f) { return Vec(f.values()); })
      .def("__call__", [](const Functional& f, const Element& a) { return f(a); });

  py::class_<QG>(m, "QuantumGroup")
      .def_property_readonly("n", [](const QG& q) { return q.p->n(); })
      .def_property_readonly("name", [](const QG& q) { return q.p->name(); })
      .def_property_readonly("haar", [](const QG& q) { return Vec(q.p->haar_values()); })
      .def_property_readonly("counit", [](const QG& q) { return Vec(q.p->counit_values()); })
      .def_property_readonly("antipode", [](const QG& q) { return Mat(q.p->antipode()); })
      .def_property_readonly("delta", [](const QG& q) { return Mat(q.p->delta()); })
      .def_property_readonly("multiplicative_unitary",
                             [](const QG& q) { return Mat(q.p->mult_unitary()); })
      .def("basis_element", [](const QG& q, int i) { return q.p->basis_element(i); })
      .def("element", [](const QG& q, const Vec& v) { return q.p->element(v); })
      .def("is_commutative", [](const QG& q) { return q.p->is_commutative(); })
      .def("is_cocommutative", [](const QG& q) { return q.p->is_cocommutative(); })
      .def("validation_summary", [](const QG& q) { return q.p->report().summary(); });

  py::class_<IdempotentState>(m, "IdempotentState")
      .def_readonly("phi", &IdempotentState::phi)
      .def_readonly("rho", &IdempotentState::rho)
      .def_readonly("f", &IdempotentState::f)
      .def_readonly("p", &IdempotentState::p);

  m.def("builtin", [](const std::string& name) { return QG{builtin(name)}; }, py::arg("name"));
  m.def("builtin_names", &builtin_names);
  m.def("parse", [](const std::string& text) { return QG{parse_quantum_group(text)}; },
        py::arg("json_text"));
  m.def("load", [](const std::string& path) { return QG{load_quantum_group(path)}; },
        py::arg("path"));
  m.def("write", [](const QG& qg) { return write_quantum_group(*qg.p); }, py::arg("qg"));

  m.def("haar_state", [](const QG& qg) { return haar_state(qg.p); });
  m.def("counit_functional", [](const QG& qg) { return counit_functional(qg.p); });
  m.def("convolve", &convolve);
  m.def("is_idempotent_state", &is_idempotent_state);
  m.def("order_le", &order_le);

  m.def(
      "search_idempotents",
      [](const QG& qg, int seeds, unsigned long long rng_seed) {
        return search_idempotents(qg.p, seeds, rng_seed).states;
      },
      py::arg("qg"), py::arg("seeds") = 40, py::arg("rng_seed") = 1);

  m.def(
      "lattice_json",
      [](const QG& qg, int seeds, unsigned long long rng_seed) {
        const SearchResult res = search_idempotents(qg.p, seeds, rng_seed);
        const IdempotentLattice lat = build_lattice(qg.p, res.states);
        std::vector<QuantumSubgroup> subs;
        for (const auto& st : lat.elements)
          if (qg.p->is_central(st.f))
            subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
        std::vector<bool> flags;
        for (const auto& st : lat.elements)
          flags.push_back(haar_equivalence_report(st, subs).is_haar);
        return export_lattice(lat, "json", res.exhaustive, flags);
      },
      py::arg("qg"), py::arg("seeds") = 40, py::arg("rng_seed") = 1);
}
