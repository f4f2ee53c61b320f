#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betti_cone/catalog.hpp"
#include "betti_cone/cone.hpp"
#include "betti_cone/fan.hpp"
#include "betti_cone/json_io.hpp"
#include "betti_cone/resolver.hpp"

namespace py = pybind11;
namespace bj = betti::json;
using namespace betti;

namespace {

std::string dump(const bj::Json& j) { return j.dump(); }

std::string pure(const std::string& ring_text, const std::string& seq_text) {
  const RingSpec ring = bj::ring_from_json(bj::parse(ring_text));
  return dump(bj::diagram_to_json(pure_diagram(ring, bj::sequence_from_json(ring, bj::parse(seq_text)))));
}

std::string check(const std::string& diagram_text) {
  const BettiDiagram v = bj::diagram_from_json(bj::parse(diagram_text));
  const auto verdict = membership(v.ring(), v);
  if (!verdict) return dump({{"verdict", "InCone"}});
  return dump({{"verdict", "NotInCone"}, {"violation", bj::violation_to_json(*verdict)}});
}

std::string decomposition(const std::string& diagram_text) {
  const BettiDiagram v = bj::diagram_from_json(bj::parse(diagram_text));
  return dump(bj::decomposition_to_json(v.ring(), decompose(v.ring(), v)));
}

std::string hilbert(const std::string& diagram_text, int k) {
  const BettiDiagram v = bj::diagram_from_json(bj::parse(diagram_text));
  return dump(bj::rational_to_json(hilbert_function(v.ring(), v, k)));
}

std::string mult(const std::string& diagram_text) {
  const BettiDiagram v = bj::diagram_from_json(bj::parse(diagram_text));
  return dump(bj::multiplicity_to_json(v.ring(), multiplicity_bounds(v.ring(), v)));
}

std::string fan(const std::string& ring_text, int m, bool check_intersections) {
  return dump(bj::fan_report_to_json(verify_fan(bj::ring_from_json(bj::parse(ring_text)), m, check_intersections)));
}

std::string resolve_betti(const std::string& presentation_text, int steps, int slack) {
  const GradedPresentation p = bj::presentation_from_json(bj::parse(presentation_text));
  if (!p.ring) throw InvalidArgument("presentation must be over one of the hypersurface rings");
  return dump(bj::diagram_to_json(minimal_betti(*p.ring, p, steps, slack)));
}

std::vector<std::tuple<std::string, std::string, std::string>> examples() {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : run_catalog()) out.emplace_back(e.name, e.expected, e.actual);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti cones over hypersurface rings (JSON-string interface)";

  auto error = py::register_exception<Error>(m, "BettiError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<FamilyMismatch>(m, "FamilyMismatch", error.ptr());
  py::register_exception<TailInconsistency>(m, "TailInconsistency", error.ptr());
  py::register_exception<NotInCone>(m, "NotInCone", error.ptr());

  m.def("pure_diagram", &pure, py::arg("ring"), py::arg("sequence"));
  m.def("membership", &check, py::arg("diagram"));
  m.def("decompose", &decomposition, py::arg("diagram"));
  m.def("hilbert_function", &hilbert, py::arg("diagram"), py::arg("k"));
  m.def("multiplicity_bounds", &mult, py::arg("diagram"));
  m.def("verify_fan", &fan, py::arg("ring"), py::arg("m"), py::arg("check_intersections") = true,
        py::call_guard<py::gil_scoped_release>());
  m.def("minimal_betti", &resolve_betti, py::arg("presentation"), py::arg("steps"), py::arg("slack") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("examples", &examples);
}
