// JSON strings cross the boundary; the Python package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magic/algebra.hpp"
#include "magic/ehrhart.hpp"
#include "magic/enumerate.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/io.hpp"
#include "magic/symmetry.hpp"

namespace py = pybind11;
using namespace magic;

namespace {

Budget budget_of(std::optional<double> seconds) {
  Budget b;
  b.seconds = seconds;
  return b;
}

Json parse(const std::string& text) { return parse_json(text, "argument"); }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto error = py::register_exception<Error>(m, "MagicError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", error.ptr());

  m.def("build_system", [](const std::string& family, std::size_t n, std::size_t d) {
    return dump(to_json(build_system(family_from_name(family), {n, d})));
  }, py::arg("family"), py::arg("n") = 0, py::arg("d") = 0);

  m.def("graph_preset", [](const std::string& name, std::size_t n) {
    if (name == "gamma") return dump(to_json(gamma_graph(n)));
    if (name == "complete") return dump(to_json(complete(n)));
    if (name == "pi") return dump(to_json(pi(n)));
    if (name == "petersen") return dump(to_json(petersen()));
    return dump(to_json(platonic(name)));
  }, py::arg("name"), py::arg("n") = 0);

  m.def("labeling_cone", [](const std::string& graph) {
    return dump(to_json(labeling_cone(graph_from_json(parse(graph)))));
  });

  m.def("verify_member", [](const std::string& system, const std::string& point) {
    auto c = verify_member(system_from_json(parse(system)), point_from_json(parse(point)));
    return py::make_tuple(c.member, c.degree);
  });

  m.def("hilbert_basis", [](const std::string& system, std::optional<double> seconds) {
    HilbertOptions opts;
    opts.budget = budget_of(seconds);
    py::gil_scoped_release release;
    return dump(to_json(hilbert_basis(system_from_json(parse(system)), opts)));
  }, py::arg("system"), py::arg("seconds") = py::none());

  m.def("hilbert_series", [](const std::string& basis, std::optional<std::int64_t> degree,
                             std::optional<double> seconds) {
    SeriesOptions opts;
    opts.budget = budget_of(seconds);
    opts.degree = degree;
    py::gil_scoped_release release;
    return dump(to_json(hilbert_series(basis_from_json(parse(basis)), opts)));
  }, py::arg("basis"), py::arg("degree") = py::none(), py::arg("seconds") = py::none());

  m.def("expand_series", [](const std::string& series, std::int64_t dmax) {
    Json out = Json::array();
    for (const auto& c : expand_series(series_from_json(parse(series)), dmax)) out.push_back(c.get_str());
    return dump(out);
  });

  m.def("count_points", [](const std::string& system, std::int64_t s, std::optional<double> seconds) {
    EnumOptions opts;
    opts.budget = budget_of(seconds);
    py::gil_scoped_release release;
    return count_points(system_from_json(parse(system)), s, opts).get_str();
  }, py::arg("system"), py::arg("s"), py::arg("seconds") = py::none());

  m.def("quasi_period", [](const std::string& system) {
    return quasi_period(system_from_json(parse(system)));
  });

  m.def("polytope_dimension", [](const std::string& system) {
    return polytope_dimension(system_from_json(parse(system)));
  });

  m.def("interpolate", [](const std::string& samples, std::int64_t period, std::size_t degree) {
    return dump(to_json(interpolate(samples_from_json(parse(samples)), period, degree)));
  });

  m.def("formula_from_oracle", [](const std::string& system, std::int64_t period, std::size_t degree) {
    py::gil_scoped_release release;
    return dump(to_json(formula_from_oracle(system_from_json(parse(system)), period, degree)));
  });

  m.def("evaluate", [](const std::string& qp, std::int64_t s) {
    return quasi_polynomial_from_json(parse(qp)).eval(s).get_str();
  });

  m.def("format_formula", [](const std::string& qp) {
    return quasi_polynomial_from_json(parse(qp)).to_string();
  });

  m.def("group_order", [](const std::string& preset) {
    return group_order(group_preset(preset)).get_str();
  });
}
