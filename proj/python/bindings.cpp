#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibniz/classify.hpp"
#include "leibniz/cover.hpp"
#include "leibniz/error.hpp"
#include "leibniz/io.hpp"
#include "leibniz/sweep.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

Field field_of(const std::string& name) {
  if (name == "Q") return Field::rationals();
  return Field::prime(std::stoull(name));
}

py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::Json from_python(const py::object& o) {
  return io::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Subspace rows_to_subspace(const LeibnizAlgebra& g, const std::vector<std::vector<std::string>>& rows) {
  io::Json span = io::Json::array();
  for (const auto& r : rows) span.push_back(r);
  return io::subspace_from_json({{"span", span}}, g.field(), g.dim());
}

}  // namespace

PYBIND11_MODULE(_leibniz, m) {
  m.doc() = "Exact computations with right Leibniz algebras";

  py::register_exception<Error>(m, "LeibnizError", PyExc_ValueError);

  py::class_<LeibnizAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &LeibnizAlgebra::dim)
      .def_property_readonly("labels", &LeibnizAlgebra::labels)
      .def_property_readonly("field", [](const LeibnizAlgebra& g) { return g.field().name(); })
      .def("to_dict", [](const LeibnizAlgebra& g) { return to_python(io::algebra_to_json(g)); })
      .def_static("from_dict", [](const py::object& d) { return io::algebra_from_json(from_python(d)); })
      .def("is_valid", [](const LeibnizAlgebra& g) { return validate(g).ok(); })
      .def("is_nilpotent", [](const LeibnizAlgebra& g) { return is_nilpotent(g); })
      .def("derived_dim", [](const LeibnizAlgebra& g) { return derived(g).dim(); })
      .def("center_dim", [](const LeibnizAlgebra& g) { return center(g).dim(); })
      .def("__eq__", [](const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a == b; })
      .def("__repr__", [](const LeibnizAlgebra& g) {
        return "<Algebra dim=" + std::to_string(g.dim()) + " over " + g.field().name() + ">";
      });

  py::class_<Pair>(m, "Pair")
      .def(py::init([](const LeibnizAlgebra& g, const std::vector<std::vector<std::string>>& rows) {
             return Pair::make(g, rows_to_subspace(g, rows));
           }),
           py::arg("algebra"), py::arg("span"))
      .def_static("full", &Pair::full)
      .def_static("from_dict", [](const py::object& d) { return io::pair_from_json(from_python(d)); })
      .def("to_dict", [](const Pair& p) { return to_python(io::pair_to_json(p)); })
      .def_property_readonly("algebra", [](const Pair& p) { return p.g; })
      .def_property_readonly("ideal_dim", [](const Pair& p) { return p.n.dim(); });

  m.def("catalog", [](const std::string& name, std::size_t param, const std::string& field) {
        return catalog::by_name(name, param, field_of(field));
      },
      py::arg("name"), py::arg("param") = 0, py::arg("field") = "Q");
  m.def("direct_sum", &direct_sum);
  m.def("direct_sum_pair", &direct_sum_pair);
  m.def("catalog_pairs", [](std::size_t max_dim) {
    std::vector<std::pair<std::string, Pair>> out;
    for (auto& [name, p] : catalog_pairs(max_dim)) out.emplace_back(name, p);
    return out;
  });

  m.def("tensor_dim", [](const Pair& p) { return tensor_product(p.g, full_space(p.g), p.n).dim(); });
  m.def("exterior_dim", [](const Pair& p) { return exterior_product(p.g, full_space(p.g), p.n).dim(); });
  m.def("hl1", [](const Pair& p) { return hl1(p).dim; });
  m.def(
      "hl2",
      [](const Pair& p, const std::string& method) -> std::size_t {
        if (method == "exterior") return hl2_exterior(p).dim;
        if (method == "cone") return hl2_cone(p).dim;
        if (method == "tau") return hl2_central_tau(p).dim;
        if (method == "star") return hl2_central_star(p).dim;
        throw Error(ErrorCode::InvalidInput, "unknown method '" + method + "'");
      },
      py::arg("pair"), py::arg("method") = "exterior");
  m.def("defect", &defect);
  m.def("classify", [](const Pair& p) {
    ClassificationVerdict v = classify(p);
    py::dict d;
    d["defect"] = v.defect;
    d["hl2"] = v.hl2_dim;
    d["case"] = std::string(to_string(v.matched_case));
    d["consistent"] = v.consistent();
    return d;
  });
  m.def("kunneth_holds", [](const Pair& a, const Pair& b) { return kunneth_check(a, b).holds(); });

  m.def("abelian_pair_cover_check", [](const Pair& p) {
    StemCoverCandidate c = abelian_pair_cover(p);
    py::dict d;
    d["kernel_dim"] = kernel(c.cm.delta).dim();
    d["crossed_module_ok"] = validate_crossed_module(c.cm).ok();
    d["stem_cover_ok"] = validate_stem_cover(c).ok();
    return d;
  });
  m.def("cocycle_cover", [](const LeibnizAlgebra& g) {
    return to_python(io::crossed_module_to_json(cocycle_cover(g).cm));
  });
}
