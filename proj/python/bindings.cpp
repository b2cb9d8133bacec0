#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mchords/chordbound.hpp"
#include "mchords/curvekit.hpp"
#include "mchords/errors.hpp"
#include "mchords/highdim.hpp"
#include "mchords/involute.hpp"
#include "mchords/io.hpp"
#include "mchords/normplane.hpp"

namespace py = pybind11;
using namespace mchords;

namespace {

using Pt = std::pair<double, double>;

Vec2 vec(Pt p) { return {p.first, p.second}; }
Pt pt(Vec2 v) { return {v.x, v.y}; }

Polyline polyline(const std::vector<Pt>& pts) {
  Polyline c;
  for (const Pt& p : pts) c.points.push_back(vec(p));
  return c;
}

std::vector<Pt> pts(std::span<const Vec2> v) {
  std::vector<Pt> out;
  for (const Vec2& x : v) out.push_back(pt(x));
  return out;
}

py::dict report_dict(const ChordReport& r) {
  py::list witnesses;
  for (const ChordWitness& w : r.witnesses) {
    py::dict d;
    d["indices"] = w.indices;
    d["deficit"] = w.deficit;
    witnesses.append(d);
  }
  py::dict d;
  d["holds"] = r.holds;
  d["max_deficit"] = r.max_deficit;
  d["tol"] = r.tol;
  d["witnesses"] = witnesses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curves with increasing chords in normed planes";
  py::register_exception<Error>(m, "MchordsError", PyExc_ValueError);

  py::class_<UnitDisk>(m, "UnitDisk")
      .def_static("load", &load_disk, py::arg("spec"), py::arg("resolution") = UnitDisk::kDefaultResolution)
      .def("gauge", [](const UnitDisk& d, Pt v) { return d.gauge(vec(v)); })
      .def("unit_vector", [](const UnitDisk& d, double theta) { return pt(d.unit_vector(theta)); })
      .def("vertices", [](const UnitDisk& d) { return pts(d.vertices()); })
      .def("describe", &UnitDisk::describe);

  m.def("lm", [](const UnitDisk& d, double dir) { return lm(d, dir); }, py::arg("disk"), py::arg("direction"));
  m.def(
      "lm_sweep",
      [](const UnitDisk& d, std::size_t n) {
        const LmProfile p = lm_sweep(d, n);
        py::dict out;
        out["directions"] = p.directions;
        out["values"] = p.values;
        out["min"] = p.min;
        out["argmin"] = p.argmin;
        out["max"] = p.max;
        out["argmax"] = p.argmax;
        return out;
      },
      py::arg("disk"), py::arg("n") = 360);
  m.def(
      "check_increasing_chords",
      [](const UnitDisk& d, const std::vector<Pt>& curve, std::optional<double> tol) {
        return report_dict(check_increasing_chords(d, polyline(curve), tol));
      },
      py::arg("disk"), py::arg("curve"), py::arg("tol") = py::none());
  m.def(
      "involute",
      [](const UnitDisk& norm, const UnitDisk& base, Pt p, double theta_min, double theta_max, std::size_t n) {
        const InvoluteCurve c = build_involute(norm, base.body(), vec(p), theta_min, theta_max, n);
        return py::make_tuple(c.thetas, pts(c.points.points));
      },
      py::arg("norm"), py::arg("base"), py::arg("p"), py::arg("theta_min"), py::arg("theta_max"), py::arg("n") = 1024);
  m.def("convexify", [](const std::vector<Pt>& curve) { return pts(convexify(polyline(curve)).points); });
  m.def("hypercube_curve", [](std::size_t d) { return hypercube_curve(d).points; });
  m.def(
      "check_hypercube",
      [](std::size_t d, std::size_t samples) { return report_dict(check_increasing_chords_dd(hypercube_curve(d), samples)); },
      py::arg("d"), py::arg("samples_per_edge") = 8);
}
