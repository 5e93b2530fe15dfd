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

#include "areaform/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace areaform {

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require(const Json& obj, const std::string& path, std::string_view key) {
  if (!obj.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path.empty() ? "/" : path, "missing key '" + std::string(key) + "'");
  return *it;
}

const Json* optional_key(const Json& obj, std::string_view key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get<std::string>();
}

ExtReal parse_value(const Json& j, const std::string& path, Backend backend) {
  try {
    if (j.is_number_unsigned()) return ExtReal(Rational(mpz_class(std::to_string(j.get<std::uint64_t>()))));
    if (j.is_number_integer()) {
      auto v = j.get<std::int64_t>();
      if (v < 0) throw InputError(path, "negative value " + std::to_string(v));
      return ExtReal(Rational(mpz_class(std::to_string(v))));
    }
    if (j.is_number_float()) {
      double v = j.get<double>();
      if (v < 0) throw InputError(path, "negative value " + shortest_repr(v));
      return backend == Backend::Float ? ExtReal::from_double(v) : ExtReal::parse(shortest_repr(v));
    }
    if (j.is_string()) return ExtReal::parse(j.get<std::string>());
  } catch (const ArithmeticError& e) {
    throw InputError(path, e.what());
  }
  throw InputError(path, "expected a number or a string such as \"inf\" or \"1/3\"");
}

Rational rational_from_text(std::string text, const std::string& path) {
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.erase(0, 1);
  ExtReal v;
  try {
    v = ExtReal::parse(text);
  } catch (const ArithmeticError& e) {
    throw InputError(path, e.what());
  }
  if (v.is_infinite()) throw InputError(path, "coordinates must be finite");
  return negative ? Rational(-v.rational()) : v.rational();
}

// One coordinate: exact when the metric is rational, else a double.
void parse_coordinate(const Json& j, const std::string& path, bool exact, std::vector<Rational>& q,
                      std::vector<double>& d) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (exact) {
      q.push_back(j.is_number_unsigned() ? Rational(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                         : Rational(mpz_class(std::to_string(j.get<std::int64_t>()))));
    } else {
      d.push_back(j.get<double>());
    }
  } else if (j.is_number_float()) {
    if (exact) {
      q.push_back(rational_from_text(shortest_repr(j.get<double>()), path));
    } else {
      d.push_back(j.get<double>());
    }
  } else if (j.is_string()) {
    Rational r = rational_from_text(j.get<std::string>(), path);
    if (exact) {
      q.push_back(r);
    } else {
      d.push_back(nearest_double(r));
    }
  } else {
    throw InputError(path, "expected a coordinate value");
  }
}

Backend parse_backend(const Json& j, const std::string& path) {
  std::string s = require_string(j, path);
  if (s == "rational") return Backend::Rational;
  if (s == "float") return Backend::Float;
  throw InputError(path, "backend must be \"rational\" or \"float\", got \"" + s + "\"");
}

std::size_t point_index(const FiniteMetricSpace& space, const Json& j, const std::string& path) {
  std::string id = require_string(j, path);
  auto idx = space.index_of(id);
  if (!idx) throw InputError(path, "unknown point '" + id + "'");
  return *idx;
}

PointSet parse_members(const FiniteMetricSpace& space, const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of point ids");
  PointSet s(space.size());
  for (std::size_t k = 0; k < j.size(); ++k) s.insert(point_index(space, j[k], child(path, k)));
  return s;
}

std::map<PointSet, ExtReal> parse_set_table(const FiniteMetricSpace& space, const Json& j, const std::string& path,
                                            Backend backend) {
  if (!j.is_array()) throw InputError(path, "expected an array of {members, value}");
  std::map<PointSet, ExtReal> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string at = child(path, k);
    PointSet s = parse_members(space, require(j[k], at, "members"), child(at, "members"));
    if (s.empty()) throw InputError(child(at, "members"), "empty set");
    if (!out.emplace(s, parse_value(require(j[k], at, "value"), child(at, "value"), backend)).second) {
      throw InputError(at, "set listed twice");
    }
  }
  return out;
}

FiniteMetricSpace parse_space(const Json& doc, Backend backend) {
  const Json& points = require(doc, "", "points");
  if (!points.is_array()) throw InputError("/points", "expected an array");
  std::vector<std::string> ids;
  std::vector<const Json*> coords;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::string at = child("/points", i);
    const Json& p = points[i];
    std::string id;
    const Json* c = nullptr;
    if (p.is_string()) {
      id = p.get<std::string>();
    } else if (p.is_object()) {
      id = require_string(require(p, at, "id"), child(at, "id"));
      c = optional_key(p, "coords");
    } else {
      throw InputError(at, "expected a point id or an object with \"id\"");
    }
    if (!seen.insert(id).second) throw InputError(at, "duplicate point '" + id + "'");
    ids.push_back(id);
    coords.push_back(c);
  }

  const Json* metric = optional_key(doc, "metric");
  std::string type = "euclidean";
  Backend metric_backend = backend;
  if (metric) {
    if (metric->is_string()) {
      type = metric->get<std::string>();
    } else if (metric->is_object()) {
      if (auto t = optional_key(*metric, "type")) {
        type = require_string(*t, "/metric/type");
      } else if (optional_key(*metric, "matrix")) {
        type = "matrix";
      }
      if (auto b = optional_key(*metric, "backend")) metric_backend = parse_backend(*b, "/metric/backend");
    } else {
      throw InputError("/metric", "expected \"euclidean\" or an object");
    }
  }
  try {
    if (type == "euclidean") {
      std::vector<Coordinates> cs;
      const bool exact = metric_backend == Backend::Rational;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        std::string at = child(child("/points", i), "coords");
        if (!coords[i] || !coords[i]->is_array()) throw InputError(at, "euclidean metric needs coordinates");
        std::vector<Rational> q;
        std::vector<double> d;
        for (std::size_t k = 0; k < coords[i]->size(); ++k) parse_coordinate((*coords[i])[k], child(at, k), exact, q, d);
        cs.push_back(exact ? Coordinates::from_exact(std::move(q)) : Coordinates::from_approx(std::move(d)));
      }
      return FiniteMetricSpace::euclidean(std::move(ids), std::move(cs), metric_backend);
    }
    if (type == "matrix") {
      const Json& m = metric->is_object() ? require(*metric, "/metric", "matrix") : *metric;
      if (!m.is_array() || m.size() != ids.size()) throw InputError("/metric/matrix", "expected one row per point");
      std::vector<std::vector<ExtReal>> rows;
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::string at = child("/metric/matrix", i);
        if (!m[i].is_array() || m[i].size() != ids.size()) throw InputError(at, "expected one entry per point");
        std::vector<ExtReal> row;
        for (std::size_t k = 0; k < m[i].size(); ++k) row.push_back(parse_value(m[i][k], child(at, k), metric_backend));
        rows.push_back(std::move(row));
      }
      return FiniteMetricSpace::from_matrix(std::move(ids), std::move(rows));
    }
  } catch (const MetricError& e) {
    throw InputError("/metric", e.what());
  }
  throw InputError("/metric", "unknown metric type '" + type + "'");
}

Family parse_family(const Json& doc, const FiniteMetricSpace& space, Backend backend) {
  const Json& f = require(doc, "", "family");
  if (f.is_object()) {
    std::string kind = require_string(require(f, "/family", "generate"), "/family/generate");
    std::optional<ExtReal> max_radius;
    if (auto r = optional_key(f, "max_radius")) max_radius = parse_value(*r, "/family/max_radius", backend);
    bool positive = false;
    if (auto p = optional_key(f, "positive_diameter")) {
      if (!p->is_boolean()) throw InputError("/family/positive_diameter", "expected true or false");
      positive = p->get<bool>();
    }
    try {
      if (kind == "closed-balls") return closed_ball_family(space, max_radius, positive);
      if (kind == "open-balls") return open_ball_family(space, max_radius, positive);
      if (kind == "all-subsets") return all_subsets_family(space);
    } catch (const std::invalid_argument& e) {
      throw InputError("/family", e.what());
    }
    throw InputError("/family/generate", "unknown family '" + kind + "'");
  }
  if (!f.is_array()) throw InputError("/family", "expected an array of members or {\"generate\": ...}");
  Family family;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string at = child("/family", i);
    const Json& m = f[i];
    FamilyMember member;
    member.set = parse_members(space, require(m, at, "members"), child(at, "members"));
    if (member.set.empty()) throw InputError(child(at, "members"), "empty member");
    if (auto z = optional_key(m, "zeta")) member.zeta = parse_value(*z, child(at, "zeta"), backend);
    if (auto s = optional_key(m, "scale")) member.scale = parse_value(*s, child(at, "scale"), backend);
    if (auto c = optional_key(m, "center")) {
      BallTag tag;
      tag.center = point_index(space, *c, child(at, "center"));
      tag.radius = parse_value(require(m, at, "radius"), child(at, "radius"), backend);
      if (auto o = optional_key(m, "open")) tag.open = o->is_boolean() && o->get<bool>();
      member.ball = tag;
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

Gauge parse_gauge(const Json& doc, const FiniteMetricSpace& space, Backend backend) {
  const Json* g = optional_key(doc, "gauge");
  if (!g) return Gauge::explicit_table({});
  std::string type = require_string(require(*g, "/gauge", "type"), "/gauge/type");
  if (type == "explicit") {
    std::map<PointSet, ExtReal> table;
    if (auto t = optional_key(*g, "table")) table = parse_set_table(space, *t, "/gauge/table", backend);
    return Gauge::explicit_table(std::move(table));
  }
  ExtReal alpha = parse_value(require(*g, "/gauge", "alpha"), "/gauge/alpha", backend);
  ExtReal c = ExtReal(1);
  if (auto ca = optional_key(*g, "c_alpha")) c = parse_value(*ca, "/gauge/c_alpha", backend);
  try {
    if (type == "hausdorff") return Gauge::hausdorff(alpha, c);
    if (type == "spherical") return Gauge::spherical(alpha, c);
    if (type == "open-spherical") return Gauge::open_spherical(alpha, c);
  } catch (const std::exception& e) {
    throw InputError("/gauge", e.what());
  }
  throw InputError("/gauge/type", "unknown gauge type '" + type + "'");
}

AtomicMeasure parse_measure(const Json& doc, const FiniteMetricSpace& space, Backend backend) {
  const Json& m = require(doc, "", "measure");
  std::string type = require_string(require(m, "/measure", "type"), "/measure/type");
  try {
    if (type == "atomic") {
      const Json& mass = require(m, "/measure", "mass");
      if (!mass.is_object()) throw InputError("/measure/mass", "expected an object {id: mass}");
      std::vector<ExtReal> masses(space.size());
      for (auto it = mass.begin(); it != mass.end(); ++it) {
        std::string at = child("/measure/mass", it.key());
        auto idx = space.index_of(it.key());
        if (!idx) throw InputError(at, "unknown point '" + it.key() + "'");
        masses[*idx] = parse_value(it.value(), at, backend);
      }
      return AtomicMeasure::atomic(std::move(masses));
    }
    if (type == "table") {
      return AtomicMeasure::table(space.size(),
                                  parse_set_table(space, require(m, "/measure", "values"), "/measure/values", backend));
    }
  } catch (const MeasureError& e) {
    throw InputError("/measure", e.what());
  }
  throw InputError("/measure/type", "unknown measure type '" + type + "'");
}

bool decimal_round_trips(const Rational& q) {
  double d = nearest_double(q);
  std::string text = shortest_repr(std::abs(d));
  try {
    Rational back = ExtReal::parse(text).rational();
    return (sgn(q) < 0 ? Rational(-back) : back) == q;
  } catch (const ArithmeticError&) {
    return false;
  }
}

Json exact_json(Rational q, bool strings_only) {
  q.canonicalize();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  if (!strings_only && q.get_den() != 1 && decimal_round_trips(q)) return Json(nearest_double(q));
  if (sgn(q) >= 0) return Json(ExtReal(q).to_string());
  return Json("-" + ExtReal(Rational(-q)).to_string());
}

// Float-backend files read numbers as doubles, so exact fractions go as strings.
Json value_json(const ExtReal& v, bool float_context) {
  if (v.is_infinite()) return Json("inf");
  if (!v.is_exact()) return Json(v.to_double());
  return exact_json(v.rational(), float_context);
}

Json coordinate_json(const Coordinates& c, std::size_t k) {
  if (!c.exact.empty()) return exact_json(c.exact[k], false);
  return Json(c.approx[k]);
}

std::string_view backend_name(Backend b) { return b == Backend::Float ? "float" : "rational"; }

}  // namespace

MetricInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("/", "expected a JSON object");
  MetricInstance inst;
  if (auto b = optional_key(doc, "backend")) inst.backend = parse_backend(*b, "/backend");
  inst.space = parse_space(doc, inst.backend);
  inst.family = parse_family(doc, inst.space, inst.backend);
  inst.gauge = parse_gauge(doc, inst.space, inst.backend);
  inst.measure = parse_measure(doc, inst.space, inst.backend);
  if (auto t = optional_key(doc, "tau")) {
    inst.tau = parse_value(*t, "/tau", inst.backend);
    inst.tau_is_default = false;
  }
  if (auto r = optional_key(doc, "resolution")) inst.resolution = parse_value(*r, "/resolution", inst.backend);
  if (auto m = optional_key(doc, "metadata")) {
    if (!m->is_object()) throw InputError("/metadata", "expected an object");
    for (auto it = m->begin(); it != m->end(); ++it) {
      inst.metadata[it.key()] = it->is_string() ? it->get<std::string>() : it->dump();
    }
  }
  try {
    inst.validate();
    (void)inst.gauged_family();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("/", e.what());
  }
  return inst;
}

Json instance_to_json(const MetricInstance& inst) {
  const bool fl = inst.backend == Backend::Float;
  const auto& space = inst.space;
  Json doc = Json::object();
  doc["backend"] = backend_name(inst.backend);
  Json points = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.is_euclidean()) {
      Json coords = Json::array();
      for (std::size_t k = 0; k < space.dimension(); ++k) coords.push_back(coordinate_json(space.coordinates(i), k));
      points.push_back({{"id", space.id(i)}, {"coords", coords}});
    } else {
      points.push_back(space.id(i));
    }
  }
  doc["points"] = points;
  if (space.is_euclidean()) {
    doc["metric"] = {{"type", "euclidean"}, {"backend", backend_name(space.backend())}};
  } else {
    Json rows = Json::array();
    for (const auto& row : space.matrix()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(value_json(v, fl));
      rows.push_back(r);
    }
    doc["metric"] = {{"type", "matrix"}, {"matrix", rows}};
  }

  const auto& family = inst.family;
  if (family.source == FamilySource::Listed) {
    Json members = Json::array();
    for (const auto& m : family.members) {
      Json j = {{"members", set_json(space, m.set)}};
      if (m.zeta) j["zeta"] = value_json(*m.zeta, fl);
      if (m.scale) j["scale"] = value_json(*m.scale, fl);
      if (m.ball) {
        j["center"] = space.id(m.ball->center);
        j["radius"] = value_json(m.ball->radius, fl);
        j["open"] = m.ball->open;
      }
      members.push_back(j);
    }
    doc["family"] = members;
  } else {
    Json g = {{"generate", std::string(to_string(family.source))}};
    if (family.max_radius) g["max_radius"] = value_json(*family.max_radius, fl);
    if (family.positive_diameter) g["positive_diameter"] = true;
    doc["family"] = g;
  }

  Json gauge = {{"type", std::string(to_string(inst.gauge.kind()))}};
  if (inst.gauge.is_diameter_power()) {
    gauge["alpha"] = value_json(inst.gauge.alpha(), fl);
    gauge["c_alpha"] = value_json(inst.gauge.c_alpha(), fl);
  } else if (!inst.gauge.table().empty()) {
    Json table = Json::array();
    for (const auto& [s, v] : inst.gauge.table()) table.push_back({{"members", set_json(space, s)}, {"value", value_json(v, fl)}});
    gauge["table"] = table;
  }
  doc["gauge"] = gauge;

  if (inst.measure.is_atomic()) {
    Json mass = Json::object();
    for (std::size_t i = 0; i < space.size(); ++i) mass[space.id(i)] = value_json(inst.measure.mass(i), fl);
    doc["measure"] = {{"type", "atomic"}, {"mass", mass}};
  } else {
    Json values = Json::array();
    for (const auto& [s, v] : inst.measure.table_values()) {
      if (!s.empty()) values.push_back({{"members", set_json(space, s)}, {"value", value_json(v, fl)}});
    }
    doc["measure"] = {{"type", "table"}, {"values", values}};
  }
  if (!inst.tau_is_default) doc["tau"] = value_json(inst.tau, fl);
  if (inst.resolution) doc["resolution"] = value_json(*inst.resolution, fl);
  if (!inst.metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [k, v] : inst.metadata) meta[k] = v;
    doc["metadata"] = meta;
  }
  return doc;
}

MetricInstance load_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("column "); p != std::string::npos) {
      if (auto q = what.find(": ", p); q != std::string::npos) what = what.substr(q + 2);
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column), what);
  }
  return instance_from_json(doc);
}

MetricInstance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_instance(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

std::string save_instance(const MetricInstance& instance) { return instance_to_json(instance).dump(2) + "\n"; }

PointSet parse_point_list(const FiniteMetricSpace& space, std::string_view text, const std::string& what) {
  PointSet s(space.size());
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string id(text.substr(start, comma - start));
    if (!id.empty()) {
      auto idx = space.index_of(id);
      if (!idx) {
        throw InputError(what + ", column " + std::to_string(start + 1), "unknown point '" + id + "'");
      }
      s.insert(*idx);
    }
    start = comma + 1;
  }
  return s;
}

Json value_json(const ExtReal& value) { return value_json(value, false); }

Json set_json(const FiniteMetricSpace& space, const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(space.id(i)); });
  return out;
}

Json to_json(const HypothesisReport& report) {
  Json conds = Json::array();
  for (const auto& c : report.conditions) {
    Json j = {{"number", c.number}, {"key", c.key}, {"statement", c.statement},
              {"status", std::string(to_string(c.status))}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (c.conclusion) j["conclusion"] = true;
    conds.push_back(j);
  }
  return {{"theorem", report.theorem},
          {"semantics", std::string(to_string(report.semantics))},
          {"topology", report.topology},
          {"gate_passed", report.gate_passed()},
          {"all_verified", report.all_verified()},
          {"conditions", conds}};
}

Json to_json(const FiniteMetricSpace& space, const AreaFormulaReport& r) {
  Json densities = Json::object();
  for (const auto& [x, f] : r.densities) densities[space.id(x)] = f ? value_json(*f) : Json(nullptr);
  Json j = {{"variant", std::string(to_string(r.variant))},
            {"backend", std::string(backend_name(r.backend))},
            {"verdict", std::string(to_string(r.verdict))},
            {"B", set_json(space, r.b)},
            {"lhs", value_json(r.lhs)},
            {"rhs", r.rhs ? value_json(*r.rhs) : Json(nullptr)},
            {"gap", r.gap ? value_json(*r.gap) : Json(nullptr)}};
  if (r.backend == Backend::Float) j["tolerance"] = value_json(r.tolerance);
  j["densities"] = densities;
  j["hypotheses"] = to_json(r.hypotheses);
  return j;
}

Json to_json(const FiniteMetricSpace& space, const LemmaReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(set_json(space, v));
  Json j = {{"passed", r.passed()},         {"checked", r.checked},   {"exhaustive", r.exhaustive},
            {"sets_checked", r.sets_checked}, {"violations", violations}};
  if (!r.exhaustive && r.checked) j["seed"] = r.seed;
  if (r.hypotheses.theorem == "lemma-major" && r.checked) {
    j["lhs"] = value_json(r.lhs);
    j["rhs"] = value_json(r.rhs);
  }
  j["hypotheses"] = to_json(r.hypotheses);
  return j;
}

Json to_json(const FiniteMetricSpace& space, const AbsContReport& r) {
  return {{"agree", r.agree()},
          {"absolutely_continuous", r.absolutely_continuous},
          {"infinite_density_null", r.infinite_density_null},
          {"forward_holds", r.forward_holds()},
          {"exhaustive", r.exhaustive},
          {"null_witness", r.null_witness ? set_json(space, *r.null_witness) : Json(nullptr)},
          {"infinite_density_set", set_json(space, r.infinite_density_set)},
          {"undefined_density", r.undefined_density},
          {"hypotheses", to_json(r.hypotheses)}};
}

Json to_json(const GaugedFamily& family, const FiniteMetricSpace& space, const PsiResult& result) {
  Json probes = Json::array();
  for (const auto& p : result.probes) {
    Json cover = Json::array();
    for (auto i : p.solution.cover) cover.push_back(set_json(space, family[i].set));
    probes.push_back({{"delta", value_json(p.delta)},
                      {"phi", value_json(p.solution.value)},
                      {"certificate", std::string(to_string(p.solution.certificate))},
                      {"nodes", p.solution.nodes},
                      {"cover", cover}});
  }
  return {{"value", value_json(result.value)}, {"probes", probes}};
}

Json to_json(const DensityProfile& p) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < p.diameters.size(); ++k) {
    steps.push_back({{"diameter", value_json(p.diameters[k])},
                     {"threshold", value_json(p.thresholds[k])},
                     {"sup", value_json(p.sup_values[k])},
                     {"inf", value_json(p.inf_values[k])}});
  }
  return {{"fine", p.fine},
          {"semantics", std::string(to_string(p.fineness.semantics))},
          {"floor", value_json(p.fineness.floor)},
          {"limsup", p.limsup ? value_json(*p.limsup) : Json(nullptr)},
          {"liminf", p.liminf ? value_json(*p.liminf) : Json(nullptr)},
          {"steps", steps}};
}

Json to_json(const FiniteMetricSpace& space, const GaugedFamily& family, const CEtaReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"set", set_json(space, family[e.set].set)},
                       {"hat", set_json(space, e.hat)},
                       {"witness", e.witness ? set_json(space, family[*e.witness].set) : Json(nullptr)},
                       {"c_needed", value_json(e.c_needed)},
                       {"eta_needed", value_json(e.eta_needed)}});
  }
  return {{"feasible", r.feasible},
          {"c", value_json(r.c)},
          {"eta", value_json(r.eta)},
          {"first_failure", r.first_failure ? set_json(space, family[*r.first_failure].set) : Json(nullptr)},
          {"entries", entries}};
}

Json to_json(const FiniteMetricSpace& space, const RegularityReport& r) {
  return {{"point", space.id(r.point)},
          {"consistent", r.consistent},
          {"probe_radius", r.probe_radius},
          {"max_radius", r.max_radius},
          {"max_jump", r.max_jump},
          {"slack", r.slack},
          {"centers", r.centers},
          {"worst_center", r.worst_center ? Json(space.id(*r.worst_center)) : Json(nullptr)},
          {"worst_radius", r.worst_radius}};
}

Json to_json(const FiniteMetricSpace& space, const BallDiameterReport& r) {
  Json flagged = Json::array();
  for (const auto& s : r.samples) {
    if (s.flagged) {
      flagged.push_back({{"center", space.id(s.center)},
                         {"radius", s.radius},
                         {"open_diameter", s.open_diameter},
                         {"closed_diameter", s.closed_diameter}});
    }
  }
  return {{"point", space.id(r.point)},
          {"regularity_consistent", r.regularity_consistent},
          {"contradicts_lemma", r.contradicts_lemma},
          {"max_difference", r.max_difference},
          {"samples", r.samples.size()},
          {"flagged", flagged}};
}

Json to_json(const FiniteMetricSpace& space, const DensityComparisonReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"point", space.id(p.point)},
                      {"scale", value_json(p.scale)},
                      {"closed", value_json(p.closed_value)},
                      {"open", value_json(p.open_value)},
                      {"relative_gap", p.relative_gap}});
  }
  return {{"max_relative_gap", r.max_relative_gap}, {"points", points}};
}

Json to_json(const FiniteMetricSpace& space, const SemicontinuityReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"point", space.id(p.point)},
                      {"value", value_json(p.value)},
                      {"radius", p.radius},
                      {"clear_radius", std::isinf(p.clear_radius) ? Json("inf") : Json(p.clear_radius)},
                      {"holds", p.holds},
                      {"below_resolution", p.below_resolution}});
  }
  return {{"passed", r.passed},
          {"delta", value_json(r.delta)},
          {"t", value_json(r.t)},
          {"resolution", r.resolution},
          {"points", points}};
}

Json to_json(const HuntSummary& s) {
  Json table = Json::array();
  for (const auto& [key, count] : s.table) {
    table.push_back({{"all_verified", key.first}, {"verdict", std::string(to_string(key.second))}, {"count", count}});
  }
  Json kinds = Json::object();
  for (const auto& [k, count] : s.kinds) kinds[std::string(to_string(k))] = count;
  auto tally = [](const LemmaTally& t) {
    return Json{{"runs", t.runs}, {"gated", t.gated}, {"checked", t.checked}, {"violations", t.violations}};
  };
  Json counterexamples = Json::array();
  for (const auto& c : s.counterexamples) {
    counterexamples.push_back(
        {{"index", c.index}, {"instance", instance_to_json(c.instance)}, {"report", to_json(c.instance.space, c.report)}});
  }
  return {{"instances", s.instances},
          {"table", table},
          {"kinds", kinds},
          {"lemma_minor", tally(s.minor)},
          {"lemma_major", tally(s.major)},
          {"constructed", s.constructed},
          {"constructed_gate_failures", s.constructed_gate_failures},
          {"constructed_silent_passes", s.constructed_silent_passes},
          {"counterexamples", counterexamples}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& key, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), out);
  } else {
    std::string value;
    if (j.is_string()) {
      value = j.get<std::string>();
    } else if (j.is_number_float()) {
      value = format_17g(j.get<double>());
    } else {
      value = j.dump();
    }
    out += csv_field(key) + "," + csv_field(value) + "\n";
  }
}

std::string csv_number(const ExtReal& v) { return v.is_infinite() ? "inf" : format_17g(v.to_double()); }

}  // namespace

std::string json_to_csv(const Json& doc) {
  std::string out = "key,value\n";
  flatten(doc, "", out);
  return out;
}

std::string profile_csv(const std::vector<std::pair<ExtReal, ExtReal>>& rows) {
  std::string out = "scale,value\n";
  for (const auto& [scale, value] : rows) out += csv_number(scale) + "," + csv_number(value) + "\n";
  return out;
}

}  // namespace areaform
