// Copyright 2026 The areaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Values cross as Fraction (exact), float, or math.inf;
// reports cross as dicts built from the JSON serializers.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "areaform/areaform.hpp"
#include "areaform/cli.hpp"
#include "areaform/io.hpp"

namespace py = pybind11;
using namespace areaform;

namespace {

py::object to_py(const ExtReal& v) {
  if (v.is_infinite()) return py::float_(INFINITY);
  if (!v.is_exact()) return py::float_(v.to_double());
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  const Rational& q = v.rational();
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

ExtReal from_py(const py::handle& v) {
  if (py::isinstance<py::bool_>(v)) throw py::type_error("expected a number, got bool");
  if (py::isinstance<py::int_>(v)) return ExtReal::parse(py::str(v).cast<std::string>());
  if (py::isinstance<py::float_>(v)) {
    double d = v.cast<double>();
    if (std::isinf(d) && d > 0) return ExtReal::infinity();
    return ExtReal::from_double(d);
  }
  if (py::isinstance<py::str>(v)) return ExtReal::parse(v.cast<std::string>());
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator")) {
    return ExtReal::parse(py::str(v.attr("numerator")).cast<std::string>() + "/" +
                          py::str(v.attr("denominator")).cast<std::string>());
  }
  throw py::type_error("expected int, float, Fraction or str");
}

py::object json_to_py(const Json& doc) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(doc.dump());
}

PointSet points_of(const MetricInstance& inst, const std::optional<std::vector<std::string>>& ids) {
  if (!ids) return inst.space.all();
  PointSet s(inst.size());
  for (const auto& id : *ids) {
    auto i = inst.space.index_of(id);
    if (!i) throw py::key_error("unknown point '" + id + "'");
    s.insert(*i);
  }
  return s;
}

std::size_t point_of(const MetricInstance& inst, const std::string& id) {
  auto i = inst.space.index_of(id);
  if (!i) throw py::key_error("unknown point '" + id + "'");
  return *i;
}

Variant variant_of(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw py::value_error("unknown variant '" + text + "'");
  return *v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-instance checks of measure-theoretic area formulas.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<MetricInstance>(m, "Instance")
      .def_property_readonly("size", &MetricInstance::size)
      .def_property_readonly("ids", [](const MetricInstance& i) { return i.space.ids(); })
      .def_property_readonly("backend", [](const MetricInstance& i) { return std::string(to_string(i.backend)); })
      .def("to_json", &save_instance)
      .def("__len__", &MetricInstance::size);

  m.def("load_instance", &load_instance, py::arg("text"));
  m.def("load_instance_file", [](const std::string& path) { return load_instance_file(path); }, py::arg("path"));

  m.def(
      "generate",
      [](const std::string& kind, int depth, std::size_t dimension, py::object h, std::size_t n, std::uint64_t seed,
         const std::string& backend, py::object alpha, bool masked_atom) {
        auto k = parse_generator(kind);
        if (!k) throw py::value_error("unknown generator '" + kind + "'");
        GeneratorSpec spec;
        spec.kind = *k;
        spec.depth = depth;
        spec.dimension = dimension;
        if (!h.is_none()) spec.h = from_py(h);
        spec.n = n;
        spec.seed = seed;
        spec.backend = backend == "float" ? Backend::Float : Backend::Rational;
        if (!alpha.is_none()) spec.alpha = from_py(alpha);
        spec.masked_atom = masked_atom;
        return generate(spec);
      },
      py::arg("kind"), py::arg("depth") = 3, py::arg("dimension") = 1, py::arg("h") = py::none(),
      py::arg("n") = 4, py::arg("seed") = 0, py::arg("backend") = "rational", py::arg("alpha") = py::none(),
      py::arg("masked_atom") = false);

  m.def(
      "quotient", [](py::object mu, py::object zeta) { return to_py(quotient(from_py(mu), from_py(zeta))); },
      py::arg("mu"), py::arg("zeta"));

  m.def(
      "phi",
      [](const MetricInstance& inst, py::object delta, std::optional<std::vector<std::string>> points) {
        return to_py(phi(inst.gauged_family(), from_py(delta), points_of(inst, points)).value);
      },
      py::arg("instance"), py::arg("delta"), py::arg("points") = py::none());

  m.def(
      "psi",
      [](const MetricInstance& inst, std::optional<std::vector<std::string>> points) {
        return to_py(Analysis(inst).psi(points_of(inst, points)));
      },
      py::arg("instance"), py::arg("points") = py::none());

  m.def(
      "federer_density",
      [](const MetricInstance& inst, const std::string& point) {
        return to_py(federer_density(inst, point_of(inst, point)));
      },
      py::arg("instance"), py::arg("point"));

  m.def(
      "verify_area_formula",
      [](const MetricInstance& inst, const std::string& variant, std::optional<std::vector<std::string>> a,
         std::optional<std::vector<std::string>> b) {
        auto report = verify_area_formula(variant_of(variant), inst, points_of(inst, a), points_of(inst, b));
        return json_to_py(to_json(inst.space, report));
      },
      py::arg("instance"), py::arg("variant") = "general-I", py::arg("a") = py::none(), py::arg("b") = py::none());

  m.def(
      "check_absolute_continuity",
      [](const MetricInstance& inst, std::optional<std::vector<std::string>> a) {
        Analysis an(inst);
        return json_to_py(to_json(inst.space, check_absolute_continuity(an, points_of(inst, a))));
      },
      py::arg("instance"), py::arg("a") = py::none());

  m.def(
      "hunt",
      [](std::uint64_t seed, std::size_t instances, const std::string& variant, std::size_t threads) {
        HuntOptions options;
        options.seed = seed;
        options.instances = instances;
        options.variant = variant_of(variant);
        options.threads = threads;
        HuntSummary summary;
        {
          py::gil_scoped_release release;
          summary = hunt(options);
        }
        return json_to_py(to_json(summary));
      },
      py::arg("seed") = 0, py::arg("instances") = 100, py::arg("variant") = "general-I", py::arg("threads") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
