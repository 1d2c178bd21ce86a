#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qflag/flag_ring.hpp"
#include "qflag/relations.hpp"
#include "qflag/schubert.hpp"
#include "qflag/verify.hpp"

namespace py = pybind11;
using namespace qflag;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

// Accepts a Permutation, one-line text "2 1 3" or a sequence of images.
Permutation to_perm(const py::handle& obj) {
  if (py::isinstance<Permutation>(obj)) return obj.cast<Permutation>();
  if (py::isinstance<py::str>(obj)) return Permutation::parse(obj.cast<std::string>());
  return Permutation(obj.cast<std::vector<int>>());
}

std::vector<Permutation> to_perms(const py::iterable& items) {
  std::vector<Permutation> out;
  for (const auto& item : items) out.push_back(to_perm(item));
  return out;
}

py::dict expansion_to_dict(const SchubertExpansion& e) {
  py::dict d;
  for (const auto& [w, c] : e.terms()) d[py::str(w.to_string())] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(qflag, m) {
  m.doc() = "Schubert polynomials and quantum cohomology of complete flag varieties";
  m.attr("__version__") = QFLAG_VERSION;

  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const py::object& obj) { return to_perm(obj); }))
      .def_static("identity", &Permutation::identity)
      .def_static("longest", &Permutation::longest)
      .def_property_readonly("images", &Permutation::images)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& w, int i) {
        if (i < 1 || i > w.size()) throw py::index_error("position out of range");
        return w(i);
      })
      .def("length", &Permutation::length)
      .def("inverse", &Permutation::inverse)
      .def("embed", &Permutation::embed)
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& w) { return py::hash(py::str(w.to_string())); })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& w) { return "Permutation('" + w.to_string() + "')"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, int n) { return parse_polynomial(text, n); }), py::arg("text"),
           py::arg("n"))
      .def_property_readonly("rank", &Polynomial::rank)
      .def("is_zero", &Polynomial::is_zero)
      .def("weighted_degree", &Polynomial::weighted_degree)
      .def("terms",
           [](const Polynomial& p) {
             py::list out;
             for (const auto& [mono, c] : p.terms()) {
               py::list x, q;
               for (int i = 1; i <= p.rank(); ++i) x.append(mono.x(i));
               for (int i = 1; i < p.rank(); ++i) q.append(mono.q(i));
               out.append(py::make_tuple(py::tuple(x), py::tuple(q), to_py(c)));
             }
             return out;
           },
           "list of (x exponents, q exponents, coefficient)")
      .def("coefficient",
           [](const Polynomial& p, const std::vector<int>& x, const std::vector<int>& q) {
             return to_py(p.coefficient(Monomial::from(x, q)));
           },
           py::arg("x"), py::arg("q") = std::vector<int>{})
      .def("substitute_q_zero", [](const Polynomial& p) { return substitute_q_zero(p); })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__mul__", [](const Polynomial& a, const py::int_& c) { return a * from_py(c); })
      .def("__rmul__", [](const Polynomial& a, const py::int_& c) { return a * from_py(c); })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", [](const Polynomial& p) { return to_text(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_text(p) + "', " + std::to_string(p.rank()) + ")"; })
      .def("to_json", [](const Polynomial& p) { return to_json(p).dump(); });

  m.def("parse_polynomial", &parse_polynomial, py::arg("text"), py::arg("n"));
  m.def("elementary_symmetric", [](int k, int n) { return elementary_symmetric(k, n); });
  m.def("divided_difference", &divided_difference, py::arg("i"), py::arg("p"));

  m.def("length", [](const py::object& w) { return to_perm(w).length(); });
  m.def("reduced_word", [](const py::object& w) { return reduced_word(to_perm(w)); });
  m.def("all_reduced_words", [](const py::object& w) { return all_reduced_words(to_perm(w)); });
  m.def("alpha", &alpha, py::arg("k"), py::arg("m"), py::arg("n"));
  m.def("beta", &beta, py::arg("k"), py::arg("n"));

  m.def("schubert_polynomial", [](const py::object& w, int n) { return schubert_polynomial(to_perm(w), n); },
        py::arg("w"), py::arg("n"));
  m.def("expand_in_schubert_basis",
        [](const Polynomial& p, int n) { return expansion_to_dict(expand_in_schubert_basis(p, n)); }, py::arg("p"),
        py::arg("n"));
  m.def("monk_multiply",
        [](int p, const py::object& w, int ambient) { return expansion_to_dict(monk_multiply(p, to_perm(w), ambient)); },
        py::arg("p"), py::arg("w"), py::arg("ambient"));
  m.def("classical_intersection_number",
        [](const py::iterable& ws, int n) { return to_py(classical_intersection_number(to_perms(ws), n)); },
        py::arg("ws"), py::arg("n"));

  m.def("quantum_relation",
        [](int k, int n, const std::string& method) {
          switch (parse_relation_method(method)) {
            case RelationMethod::kRecursion: return quantum_relation_recursive(k, n);
            case RelationMethod::kDeterminant: return quantum_relation_determinant(k, n);
            case RelationMethod::kFulton: return quantum_relation_fulton(k, n);
          }
          throw std::logic_error("unreachable");
        },
        py::arg("k"), py::arg("n"), py::arg("method") = "recursion");
  m.def("sigma_prime", [](int k, int mm) { return sigma_prime(k, mm); }, py::arg("k"), py::arg("m"));
  m.def("recursion_identity_check", &recursion_identity_check, py::arg("k"), py::arg("m"));

  py::class_<FlagRing, std::shared_ptr<FlagRing>>(m, "FlagRing")
      .def_property_readonly("n", &FlagRing::n)
      .def_property_readonly("generators", &FlagRing::generators)
      .def_property_readonly("standard_basis",
                             [](const FlagRing& r) {
                               std::vector<std::string> out;
                               for (const auto& mono : r.standard_basis()) out.push_back(to_text(mono));
                               return out;
                             })
      .def("normal_form", &FlagRing::normal_form, py::call_guard<py::gil_scoped_release>())
      .def("normal_form_linear", &FlagRing::normal_form_linear, py::call_guard<py::gil_scoped_release>())
      .def("quantum_class", [](const FlagRing& r, const py::object& w) { return r.quantum_class(to_perm(w)); })
      .def("expand", [](const FlagRing& r, const Polynomial& p) { return expansion_to_dict(r.expand(p)); })
      .def("quantum_product",
           [](const FlagRing& r, const py::object& u, const py::object& v) {
             return expansion_to_dict(r.quantum_product(to_perm(u), to_perm(v)));
           })
      .def("gromov_witten",
           [](const FlagRing& r, const py::iterable& ws, const std::vector<int>& d) {
             return to_py(r.gromov_witten(to_perms(ws), Multidegree(d)));
           },
           py::arg("ws"), py::arg("d"));

  m.def("flag_ring",
        [](int n) {
          // Shares the registry's ring; the registry outlives every caller.
          const FlagRing& ring = flag_ring(n);
          return std::shared_ptr<FlagRing>(const_cast<FlagRing*>(&ring), [](FlagRing*) {});
        },
        py::arg("n"));

  m.def("verify",
        [](int n, const std::string& level) {
          py::list out;
          for (const auto& r : run_properties(n, parse_verify_level(level))) {
            py::dict d;
            d["property"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("n"), py::arg("level") = "smoke");
}
