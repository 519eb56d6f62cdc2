#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lefschetz/corpus_io.hpp"
#include "lefschetz/integral_search.hpp"
#include "lefschetz/report.hpp"

namespace py = pybind11;
using namespace lefschetz;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  using json = nlohmann::ordered_json;
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

py::object verdict_to_py(const Verdict& v) {
  return json_to_py(nlohmann::ordered_json::parse(verdict_to_json_string(v)));
}

SearchPolicy make_policy(std::uint64_t seed, std::uint32_t budget) {
  SearchPolicy p;
  p.seed = seed;
  p.trial_budget = budget;
  return p;
}

struct PyModel {
  FlowModel model;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hard Lefschetz duality checks for isometric flows";

  py::register_exception<LoadError>(m, "LoadError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<PolynomialParseError>(m, "PolynomialParseError", PyExc_ValueError);

  py::class_<PyModel>(m, "Model")
      .def_property_readonly("name", [](const PyModel& s) { return s.model.name; })
      .def_property_readonly("n", [](const PyModel& s) { return s.model.n(); })
      .def_property_readonly("total_dims", [](const PyModel& s) { return s.model.total_dims; })
      .def_property_readonly("basic_dims",
                             [](const PyModel& s) {
                               std::vector<int> dims;
                               for (int k = 0; k <= 2 * s.model.n(); ++k)
                                 dims.push_back(s.model.bdim(k));
                               return dims;
                             })
      .def("check_thl",
           [](const PyModel& s, int k) { return verdict_to_py(check_thl(s.model, k)); },
           py::arg("degree"))
      .def("check_pk",
           [](const PyModel& s, int k) {
             auto [p1, p2] = check_primitive_conditions(s.model, k);
             return py::make_tuple(verdict_to_py(p1), verdict_to_py(p2));
           },
           py::arg("degree"))
      .def("check_hl",
           [](const PyModel& s, int k, std::uint64_t seed, std::uint32_t budget) {
             return verdict_to_py(check_hl(s.model, k, make_policy(seed, budget)));
           },
           py::arg("degree"), py::arg("seed") = 0, py::arg("budget") = 512)
      .def("check_equivalence",
           [](const PyModel& s, int k, std::uint64_t seed, std::uint32_t budget) {
             return verdict_to_py(check_equivalence(s.model, k, make_policy(seed, budget)));
           },
           py::arg("degree"), py::arg("seed") = 0, py::arg("budget") = 512)
      .def("check_parity",
           [](const PyModel& s, std::uint64_t seed, std::uint32_t budget) {
             return verdict_to_py(check_betti_parity(s.model, make_policy(seed, budget)));
           },
           py::arg("seed") = 0, py::arg("budget") = 512)
      .def("report",
           [](const PyModel& s, std::uint64_t seed, std::uint32_t budget) {
             const Report r = build_report(s.model, make_policy(seed, budget));
             return json_to_py(nlohmann::ordered_json::parse(render_machine(r)));
           },
           py::arg("seed") = 0, py::arg("budget") = 512)
      .def("report_json",
           [](const PyModel& s, std::uint64_t seed, std::uint32_t budget) {
             return render_machine(build_report(s.model, make_policy(seed, budget)));
           },
           py::arg("seed") = 0, py::arg("budget") = 512)
      .def("to_json", [](const PyModel& s) { return model_to_json(s.model); })
      .def("save", [](const PyModel& s, const std::string& path) { save_model(s.model, path); },
           py::arg("path"));

  m.def("load_model", [](const std::string& path) { return PyModel{load_model(path)}; },
        py::arg("path"), "Load and fully validate a model file");
  m.def("model_from_json", [](const std::string& text) { return PyModel{model_from_json(text)}; },
        py::arg("text"));
  m.def("gysin_build",
        [](const std::string& base_path) {
          const FlowModel base = load_model(base_path);
          FlowModel rebuilt = build_flow_model(base.algebra, base.euler);
          rebuilt.name = base.name;
          rebuilt.provenance = base.provenance;
          return PyModel{std::move(rebuilt)};
        },
        py::arg("base_path"), "Rebuild the total cohomology of a model from (basic, euler)");

  m.def("find_nonvanishing_point",
        [](const std::string& poly) {
          const auto z = find_nonvanishing_point(Polynomial::parse(poly));
          std::vector<std::string> out;
          for (const auto& c : z.coords) out.push_back(c.get_str());
          return out;
        },
        py::arg("poly"), "Lattice point where the polynomial does not vanish");
  m.def("integral_combination",
        [](const std::string& poly, const std::optional<std::vector<std::vector<std::string>>>& matrix) {
          const Polynomial p = Polynomial::parse(poly);
          RationalMatrix a = RationalMatrix::identity(p.num_vars());
          if (matrix) {
            const int rows = static_cast<int>(matrix->size());
            const int cols = rows ? static_cast<int>((*matrix)[0].size()) : 0;
            a = RationalMatrix(rows, cols);
            for (int r = 0; r < rows; ++r)
              for (int c = 0; c < cols; ++c)
                a.at(r, c) = Rational::parse((*matrix)[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
          }
          const IntegralCombination ic = integral_combination(a, p);
          py::dict out;
          py::list z, c;
          for (const auto& zi : ic.z.coords) z.append(py::str(zi.get_str()));
          for (const auto& ci : ic.c) c.append(py::str(ci.str()));
          out["z"] = z;
          out["c"] = c;
          out["value"] = py::str(ic.value.str());
          return out;
        },
        py::arg("poly"), py::arg("matrix") = py::none());

  m.def("corpus_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : bundled_corpus()) ids.push_back(e.id);
    return ids;
  });

  m.attr("__version__") = "0.1.0";
}
