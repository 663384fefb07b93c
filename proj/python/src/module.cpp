#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfkit/commands.hpp"
#include "hopfkit/grouplike.hpp"

namespace py = pybind11;
using namespace hk;

namespace {

std::vector<std::vector<std::string>> strings(const Field& F, const std::vector<Vector>& vs) {
  std::vector<std::vector<std::string>> out;
  for (auto& v : vs) {
    std::vector<std::string> row;
    for (auto& s : v) row.push_back(F.str(s));
    out.push_back(row);
  }
  return out;
}

HopfData build(const std::string& spec, const std::string& field) {
  return build_algebra(parse_algebra_spec(spec), parse_field_spec(field)).H;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact finite-dimensional Hopf algebra computations";
  py::register_exception<Error>(m, "HopfError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("command_names", &command_names);
  m.def(
      "run_command",
      [](const std::string& name, const std::string& algebra, const std::string& field, bool braided,
         std::size_t sample, std::uint64_t seed) {
        RunConfig c;
        c.algebra = algebra;
        c.field = field;
        c.braided = braided;
        c.sample = sample;
        c.seed = seed;
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_command(name, c);
        }
        return py::make_tuple(r.ok, r.doc.dump());
      },
      py::arg("name"), py::arg("algebra"), py::arg("field") = "p=5,root=4", py::arg("braided") = false,
      py::arg("sample") = 0, py::arg("seed") = 1);

  py::class_<HopfData>(m, "Hopf")
      .def_static("from_spec", &build, py::arg("spec"), py::arg("field") = "p=5,root=4")
      .def_static("from_json", [](const std::string& s) { return hopf_from_json(json::parse(s)); })
      .def_property_readonly("dim", [](const HopfData& H) { return H.dim; })
      .def_property_readonly("basis", [](const HopfData& H) { return H.basis; })
      .def("to_json", [](const HopfData& H) { return hopf_to_json(H).dump(); })
      .def("verify", [](const HopfData& H) { return report_to_json(verify_hopf_axioms(H)).dump(); })
      .def("grouplikes", [](const HopfData& H) { return strings(H.field, grouplikes(H)); })
      .def("characters", [](const HopfData& H) { return strings(H.field, characters(H)); })
      .def("dual", [](const HopfData& H) { return dual_hopf(H); })
      .def("double", [](const HopfData& H) { return drinfeld_double(base_level(H)).D.alg; });
}
