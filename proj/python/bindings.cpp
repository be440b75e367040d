#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrollkit/binary_curves.hpp"
#include "scrollkit/error.hpp"
#include "scrollkit/report.hpp"
#include "scrollkit/scroll_families.hpp"

namespace py = pybind11;
using namespace scrollkit;

namespace {

// Curves cross the boundary as JSON text; the Python side decodes them.
BinaryCurve curve_arg(const std::string& text) { return binary_curve_from_json(Json::parse(text)); }

std::string run_json(const std::string& command, const py::dict& opts) {
  ExperimentConfig c;
  c.command = command;
  c.omit_clock = true;
  for (const auto& [key, value] : opts) {
    const auto k = key.cast<std::string>();
    if (value.is_none()) continue;
    if (k == "n") c.n = value.cast<int>();
    else if (k == "d") c.d = value.cast<int>();
    else if (k == "k") c.k = value.cast<int>();
    else if (k == "h") c.h = value.cast<int>();
    else if (k == "node") c.node = value.cast<int>();
    else if (k == "trials") c.trials = value.cast<int>();
    else if (k == "a") c.a = value.cast<std::vector<int>>();
    else if (k == "field") c.field = value.cast<std::string>();
    else if (k == "seed") c.seed = value.cast<std::uint64_t>();
    else if (k == "lambda_") c.lambda = value.cast<std::string>();
    else if (k == "input") c.input = value.cast<std::string>();
    else if (k == "positive_control") c.positive_control = value.cast<bool>();
    else if (k == "repeat_t") c.repeat_t = value.cast<bool>();
    else if (k == "omit_clock") c.omit_clock = value.cast<bool>();
    else throw py::value_error("unknown option '" + k + "'");
  }
  return run(c).dump();
}

}  // namespace

PYBIND11_MODULE(_scrollkit, m) {
  m.doc() = "Exact computations on rational normal scrolls and binary curves";
  m.attr("__version__") = SCROLLKIT_VERSION;

  py::register_exception<Error>(m, "ScrollkitError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("commands", &command_names);
  m.def("run_json", &run_json, py::arg("command"), py::arg("options"));

  m.def("aut_dimension", [](int n, std::vector<int> a) { return aut_dimension(ScrollType(n, std::move(a))); });
  m.def("dim_stratum", [](int n, std::vector<int> a) { return dim_stratum(ScrollType(n, std::move(a))); });
  m.def("dim_all_scrolls", &dim_all_scrolls);
  m.def("dim_scrolls_through_frame",
        [](int n, std::vector<int> a) { return dim_scrolls_through_frame(ScrollType(n, std::move(a))); });
  m.def("dim_curves_in_scroll",
        [](int n, std::vector<int> a, int k) { return dim_curves_in_scroll(ScrollType(n, std::move(a)), k); });
  m.def("scroll_types", [](int n, int d) {
    std::vector<std::vector<int>> out;
    for (const auto& t : scroll_types(n, d)) out.push_back(t.a());
    return out;
  });
  m.def("gonality_bound", &gonality_bound);

  m.def("random_binary_curve_json", [](int n, const std::string& field, std::uint64_t seed) {
    return to_json(random_binary_curve(n, Field::parse(field), seed)).dump();
  });
  m.def("positive_control_json", [](const std::string& field, std::uint64_t seed) {
    return to_json(scroll_positive_control(Field::parse(field), seed)).dump();
  });
  m.def("project_from_node_json",
        [](const std::string& curve, int j) { return to_json(project_from_node(curve_arg(curve), j)).dump(); });
  m.def("gonality_json", [](const std::string& curve) {
    GonalityResult g = gonality_map(curve_arg(curve));
    return Json{{"kernel_dim", g.kernel_dim},
                {"equations", g.equations},
                {"unknowns", g.unknowns},
                {"degree", g.witness.degree},
                {"total_degree", g.witness.total_degree},
                {"reduced", g.witness.reduced},
                {"q1", to_json(g.witness.q1)},
                {"q2", to_json(g.witness.q2)}}
        .dump();
  });
  m.def("hyperelliptic", [](const std::string& curve) { return hyperelliptic_test(curve_arg(curve)).hyperelliptic; });
  m.def("quadric_dimension", [](const std::string& curve) { return quadrics_through(curve_arg(curve)).basis.size(); });
  m.def("containment_verdict", [](const std::string& curve, int trials, std::uint64_t seed) {
    ContainmentReport r = scroll_containment_witness(curve_arg(curve), trials, seed);
    return py::make_tuple(to_string(r.verdict), r.hits);
  });
}
