#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lbk/axioms.hpp"
#include "lbk/cli.hpp"
#include "lbk/errors.hpp"
#include "lbk/fixtures.hpp"
#include "lbk/model_io.hpp"

namespace py = pybind11;
using namespace lbk;

namespace {

std::size_t chart_index(const Atlas& atlas, const std::string& name) {
  auto c = atlas.find_chart(name);
  if (!c) throw MalformedInput("unknown chart '" + name + "'");
  return *c;
}

py::dict infinity_report(const Atlas& atlas) {
  auto r = InfinityComplex(atlas).report();
  py::dict d;
  d["chambers"] = r.chambers;
  d["apartments"] = r.apartments;
  d["full_apartments"] = r.full_apartments;
  d["thin"] = r.thin;
  d["injective"] = r.injective;
  d["connected"] = r.connected;
  d["problems"] = r.problems;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine Lambda-building models: atlases, axiom deciders, retractions";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception<AxiomFailure>(m, "AxiomFailure", PyExc_RuntimeError);

  m.def("weyl_order", [](const std::string& type) { return RootSystem::of_type(type)->weyl().size(); });
  m.def("longest_length", [](const std::string& type) { return RootSystem::of_type(type)->weyl().longest().length(); });
  m.def("positive_root_count",
        [](const std::string& type) { return RootSystem::of_type(type)->positive_roots().size(); });
  m.def(
      "metric",
      [](const std::string& type, std::size_t lambda_rank, const std::string& p, const std::string& q) {
        Apartment sigma(RootSystem::of_type(type), lambda_rank);
        return to_string(sigma.metric(parse_point(p, sigma.dimension(), lambda_rank),
                                      parse_point(q, sigma.dimension(), lambda_rank)));
      },
      py::arg("type"), py::arg("lambda_rank"), py::arg("p"), py::arg("q"));

  py::class_<Atlas>(m, "Atlas")
      .def_property_readonly("size", &Atlas::size)
      .def_property_readonly("names",
                             [](const Atlas& a) {
                               std::vector<std::string> out;
                               for (std::size_t c = 0; c < a.size(); ++c) out.push_back(a.name(c));
                               return out;
                             })
      .def_property_readonly("root_type", [](const Atlas& a) { return a.apartment().roots().name(); })
      .def_property_readonly("lambda_rank", [](const Atlas& a) { return a.apartment().lambda_rank(); })
      .def("validate", [](const Atlas& a) { return to_string(a.validate()); })
      .def("is_valid", [](const Atlas& a) { return a.validate().valid(); })
      .def("to_model", [](const Atlas& a) { return format_model(a); })
      .def("__len__", &Atlas::size);

  m.def("parse_model", &parse_model, py::arg("text"));
  m.def("load_model", [](const std::string& path) { return load_model(path); }, py::arg("path"));

  m.def("single_apartment", &single_apartment, py::arg("type") = "A2", py::arg("lambda_rank") = 1);
  m.def("lambda_tree", &lambda_tree, py::arg("ends"), py::arg("lambda_rank") = 1);
  m.def("fan", &fan, py::arg("leaves"), py::arg("type") = "A2", py::arg("lambda_rank") = 1);
  m.def("pruned_fan", &pruned_fan, py::arg("type") = "A2", py::arg("lambda_rank") = 1);
  m.def("broken_pair", &broken_pair, py::arg("lambda_rank") = 1);
  m.def("shifted_rays", &shifted_rays, py::arg("lambda_rank") = 1);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("axiom", &AxiomReport::axiom)
      .def_property_readonly("verdict", [](const AxiomReport& r) { return to_string(r.verdict); })
      .def_readonly("lines", &AxiomReport::lines)
      .def_readonly("counterexamples", &AxiomReport::counterexamples)
      .def_readonly("configurations", &AxiomReport::configurations)
      .def("__repr__", [](const AxiomReport& r) {
        return "<AxiomReport " + r.axiom + " " + to_string(r.verdict) + ">";
      });

  m.def(
      "check_axioms",
      [](const Atlas& atlas, std::vector<std::string> only, std::size_t samples, std::uint64_t seed) {
        CheckOptions options;
        options.samples = samples;
        options.seed = seed;
        return check_axioms(atlas, std::set<std::string>(only.begin(), only.end()), options);
      },
      py::arg("atlas"), py::arg("only") = std::vector<std::string>{}, py::arg("samples") = 200,
      py::arg("seed") = 0);
  m.def("format_reports", &format_reports, py::arg("reports"));
  m.def("exit_code", &exit_code, py::arg("reports"));

  m.def(
      "equivalence_suite",
      [](const Atlas& atlas, std::size_t samples, std::uint64_t seed) {
        CheckOptions options;
        options.samples = samples;
        options.seed = seed;
        auto r = equivalence_suite(atlas, options);
        py::dict d;
        d["applicable"] = r.applicable;
        d["alarms"] = r.alarms;
        d["reports"] = r.reports;
        return d;
      },
      py::arg("atlas"), py::arg("samples") = 200, py::arg("seed") = 0);

  m.def(
      "distance",
      [](const Atlas& atlas, const std::string& p, const std::string& q) {
        return to_string(atlas.global_distance(parse_building_point(atlas, p), parse_building_point(atlas, q)));
      },
      py::arg("atlas"), py::arg("p"), py::arg("q"));

  m.def(
      "retract",
      [](const Atlas& atlas, const std::string& germ, const std::vector<std::string>& points,
         const std::string& target) {
        BuildingSector s = parse_building_sector(atlas, germ);
        std::size_t t = target.empty() ? s.chart : chart_index(atlas, target);
        Retraction rho(atlas, {s.chart, {s.sector}}, t);
        std::vector<std::string> out;
        for (const auto& p : points) out.push_back(to_string(rho(parse_building_point(atlas, p))));
        return out;
      },
      py::arg("atlas"), py::arg("germ"), py::arg("points"), py::arg("target") = "");

  m.def("infinity_report", &infinity_report, py::arg("atlas"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
