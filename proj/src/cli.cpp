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

#include "areaform/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "areaform/hunt.hpp"
#include "areaform/io.hpp"

namespace areaform {

MetricInstance with_backend(const MetricInstance& instance, Backend backend) {
  MetricInstance out = instance;
  out.backend = backend;
  if (backend == Backend::Rational) return out;
  out.measure = out.measure.with_backend(backend);
  for (auto& m : out.family.members) {
    if (m.zeta) m.zeta = m.zeta->with_backend(backend);
    if (m.scale) m.scale = m.scale->with_backend(backend);
  }
  const auto& g = out.gauge;
  switch (g.kind()) {
    case GaugeKind::Explicit: {
      std::map<PointSet, ExtReal> table;
      for (const auto& [s, v] : g.table()) table.emplace(s, v.with_backend(backend));
      out.gauge = Gauge::explicit_table(std::move(table));
      break;
    }
    case GaugeKind::Hausdorff: out.gauge = Gauge::hausdorff(g.alpha().to_float(), g.c_alpha().to_float()); break;
    case GaugeKind::Spherical: out.gauge = Gauge::spherical(g.alpha().to_float(), g.c_alpha().to_float()); break;
    case GaugeKind::OpenSpherical:
      out.gauge = Gauge::open_spherical(g.alpha().to_float(), g.c_alpha().to_float());
      break;
  }
  return out;
}

namespace {

enum class Format { Json, Csv };

struct Common {
  std::string instance_path;
  std::string delta, alpha, c_alpha = "1", t, variant = "general-I", point, set, domain, open, backend, out = "json",
                                     tolerance = "1e-9", tau, c, eta, kind;
  std::uint64_t seed = 0;
  bool profile = false;
};

struct Emitter {
  std::ostream& out;
  Format format = Format::Json;
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("--out", "cannot write '" + path + "'");
    file << text;
  }
  void report(const Json& doc) const { write(format == Format::Csv ? json_to_csv(doc) : doc.dump(2) + "\n"); }
};

Emitter make_emitter(const std::string& spec, std::ostream& out) {
  if (spec == "json") return {out, Format::Json, {}};
  if (spec == "csv") return {out, Format::Csv, {}};
  const bool csv = spec.size() >= 4 && spec.compare(spec.size() - 4, 4, ".csv") == 0;
  return {out, csv ? Format::Csv : Format::Json, spec};
}

ExtReal flag_value(const std::string& text, const std::string& flag) {
  try {
    return ExtReal::parse(text);
  } catch (const ArithmeticError& e) {
    throw InputError(flag, e.what());
  }
}

double flag_double(const std::string& text, const std::string& flag) { return flag_value(text, flag).to_double(); }

Backend flag_backend(const std::string& text) {
  if (text == "rational") return Backend::Rational;
  if (text == "float") return Backend::Float;
  throw InputError("--backend", "expected rational or float, got '" + text + "'");
}

MetricInstance load(const Common& o) {
  MetricInstance inst = load_instance_file(o.instance_path);
  if (!o.tau.empty()) {
    inst.tau = flag_value(o.tau, "--tau");
    inst.tau_is_default = false;
    try {
      inst.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError("--tau", e.what());
    }
  }
  if (!o.backend.empty()) inst = with_backend(inst, flag_backend(o.backend));
  return inst;
}

// --alpha swaps in a diameter gauge of the instance's kind (Hausdorff by default).
MetricInstance with_alpha(const MetricInstance& inst, const Common& o) {
  if (o.alpha.empty()) return inst;
  ExtReal alpha = flag_value(o.alpha, "--alpha");
  ExtReal c = flag_value(o.c_alpha, "--c-alpha");
  if (o.backend == "float" || !alpha.is_exact()) {
    alpha = alpha.to_float();
    c = c.to_float();
  }
  GaugeKind kind = inst.gauge.is_diameter_power() ? inst.gauge.kind() : GaugeKind::Hausdorff;
  MetricInstance out = with_diameter_gauge(inst, alpha, c, kind);
  if (!alpha.is_exact()) out.backend = Backend::Float;
  return out;
}

std::size_t flag_point(const FiniteMetricSpace& space, const std::string& id) {
  auto idx = space.index_of(id);
  if (!idx) throw InputError("--point", "unknown point '" + id + "'");
  return *idx;
}

PointSet flag_set(const FiniteMetricSpace& space, const std::string& text, const std::string& flag) {
  if (text.empty()) return space.all();
  return parse_point_list(space, text, flag);
}

int cmd_measure(const Common& o, const Emitter& em) {
  MetricInstance inst = with_alpha(load(o), o);
  GaugedFamily family = inst.gauged_family();
  PointSet target = flag_set(inst.space, o.set, "--set");
  if (!o.delta.empty()) {
    ExtReal delta = flag_value(o.delta, "--delta");
    if (delta.is_zero()) throw InputError("--delta", "delta must be positive");
    CoverSolution s = phi(family, delta, target);
    if (o.profile) {
      em.write(profile_csv({{delta, s.value}}));
      return 0;
    }
    Json cover = Json::array();
    for (auto i : s.cover) cover.push_back(set_json(inst.space, family[i].set));
    em.report({{"quantity", "phi"},
               {"backend", std::string(to_string(family.is_exact() ? inst.backend : Backend::Float))},
               {"set", set_json(inst.space, target)},
               {"delta", value_json(delta)},
               {"value", value_json(s.value)},
               {"certificate", std::string(to_string(s.certificate))},
               {"nodes", s.nodes},
               {"cover", cover}});
    return 0;
  }
  SolverOptions options;
  if (inst.resolution) options.delta_floor = inst.fineness_floor();
  PsiResult r = psi_profile(family, target, options);
  if (o.profile) {
    std::vector<std::pair<ExtReal, ExtReal>> rows;
    for (const auto& p : r.probes) rows.emplace_back(p.delta, p.solution.value);
    em.write(profile_csv(rows));
    return 0;
  }
  Json doc = {{"quantity", "psi"},
              {"backend", std::string(to_string(family.is_exact() ? inst.backend : Backend::Float))},
              {"set", set_json(inst.space, target)}};
  doc.update(to_json(family, inst.space, r));
  em.report(doc);
  return 0;
}

int cmd_density(const Common& o, const Emitter& em) {
  MetricInstance inst = with_alpha(load(o), o);
  GaugedFamily family = inst.gauged_family();
  FilteredFamily filtered = filter_family(inst.measure, family);
  Fineness fineness = Fineness::of(inst);
  std::vector<std::size_t> points;
  if (o.point.empty()) {
    for (std::size_t i = 0; i < inst.size(); ++i) points.push_back(i);
  } else {
    points.push_back(flag_point(inst.space, o.point));
  }
  if (o.profile) {
    if (points.size() != 1) throw InputError("--profile", "needs --point");
    DensityProfile p = federer_profile(family, filtered, points[0], fineness);
    std::vector<std::pair<ExtReal, ExtReal>> rows;
    for (std::size_t k = 0; k < p.thresholds.size(); ++k) rows.emplace_back(p.thresholds[k], p.sup_values[k]);
    em.write(profile_csv(rows));
    return p.fine ? 0 : 1;
  }
  Json list = Json::array();
  bool all_fine = true;
  for (auto x : points) {
    DensityProfile p = federer_profile(family, filtered, x, fineness);
    all_fine = all_fine && p.fine;
    Json entry = {{"point", inst.space.id(x)}, {"density", p.limsup ? value_json(*p.limsup) : Json(nullptr)}};
    entry["profile"] = to_json(p);
    list.push_back(entry);
  }
  Json dropped = Json::array();
  for (const auto& [i, reason] : filtered.dropped) {
    dropped.push_back({{"set", set_json(inst.space, family[i].set)}, {"reason", std::string(to_string(reason))}});
  }
  em.report({{"quantity", "federer-density"},
             {"backend", std::string(to_string(family.is_exact() ? inst.backend : Backend::Float))},
             {"fine", all_fine},
             {"points", list},
             {"dropped", dropped}});
  return all_fine ? 0 : 1;
}

// tau with a flag saying whether it is the built-in default.
Json tau_json(const MetricInstance& inst) {
  return {{"value", value_json(inst.tau)}, {"default", inst.tau_is_default}};
}

int cmd_enlarge(const Common& o, const Emitter& em) {
  MetricInstance inst = load(o);
  if (o.set.empty()) throw InputError("--set", "required");
  GaugedFamily family = inst.gauged_family();
  FilteredFamily filtered = filter_family(inst.measure, family);
  Tau tau(inst.tau);
  PointSet s = parse_point_list(inst.space, o.set, "--set");
  ExtReal diam = inst.space.diameter(s);
  PointSet hat = enlargement(s, diam, family, filtered, tau);
  CEtaReport ceta = search_c_eta(family, filtered, tau);
  em.report({{"set", set_json(inst.space, s)},
             {"diameter", value_json(diam)},
             {"tau", tau_json(inst)},
             {"hat", set_json(inst.space, hat)},
             {"c_eta", to_json(inst.space, family, ceta)}});
  return 0;
}

Variant flag_variant(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw InputError("--variant", "unknown variant '" + text + "'");
  return *v;
}

int cmd_area_check(const Common& o, const Emitter& em) {
  MetricInstance inst = load(o);
  Variant variant = flag_variant(o.variant);
  PointSet a = flag_set(inst.space, o.domain, "--domain");
  PointSet b = o.set.empty() ? a : parse_point_list(inst.space, o.set, "--set");
  if (!b.is_subset_of(a)) throw InputError("--set", "B must lie inside the domain A");
  ExtReal alpha = inst.gauge.is_diameter_power() ? inst.gauge.alpha() : ExtReal(1);
  ExtReal c = inst.gauge.is_diameter_power() ? inst.gauge.c_alpha() : ExtReal(1);
  if (!o.alpha.empty()) {
    alpha = flag_value(o.alpha, "--alpha");
    c = flag_value(o.c_alpha, "--c-alpha");
  }
  Analysis analysis(instance_for_variant(inst, variant, alpha, c));
  auto hypotheses = area_formula_hypotheses(analysis, variant, a);
  auto report = evaluate_area_formula(analysis, variant, hypotheses, b, flag_double(o.tolerance, "--tolerance"));
  Json doc = to_json(analysis.instance().space, report);
  doc["tau"] = tau_json(inst);
  em.report(doc);
  return report.verdict == Verdict::Equal ? 0 : 1;
}

int cmd_lemmas(const Common& o, const Emitter& em) {
  MetricInstance inst = load(o);
  if (o.t.empty()) throw InputError("--t", "required");
  ExtReal t = flag_value(o.t, "--t");
  Analysis analysis(inst);
  PointSet a = flag_set(inst.space, o.domain, "--domain");
  PointSet b = o.set.empty() ? a : parse_point_list(inst.space, o.set, "--set");
  PointSet v = o.open.empty() ? inst.space.all() : parse_point_list(inst.space, o.open, "--open");
  std::optional<ExtReal> c, eta;
  if (!o.c.empty() || !o.eta.empty()) {
    if (o.c.empty() || o.eta.empty()) throw InputError("--c", "--c and --eta go together");
    c = flag_value(o.c, "--c");
    eta = flag_value(o.eta, "--eta");
  }
  SubsetCheckOptions options;
  options.seed = o.seed;
  auto minor = verify_lemma_minor(analysis, a, t, options);
  auto major = verify_lemma_major(analysis, b, v, t, c, eta);
  em.report({{"backend", std::string(to_string(analysis.backend()))},
             {"t", value_json(t)},
             {"tau", tau_json(inst)},
             {"minor", to_json(inst.space, minor)},
             {"major", to_json(inst.space, major)}});
  return minor.passed() && major.passed() ? 0 : 1;
}

int cmd_abscont(const Common& o, const Emitter& em) {
  MetricInstance inst = load(o);
  Analysis analysis(inst);
  PointSet a = flag_set(inst.space, o.domain, "--domain");
  SubsetCheckOptions options;
  options.seed = o.seed;
  auto r = check_absolute_continuity(analysis, a, options);
  Json doc = {{"backend", std::string(to_string(analysis.backend()))}, {"tau", tau_json(inst)}};
  doc.update(to_json(inst.space, r));
  em.report(doc);
  return r.hypotheses.gate_passed() && r.agree() ? 0 : 1;
}

int cmd_probe(const Common& o, const Emitter& em) {
  MetricInstance inst = load(o);
  const std::string kind = o.kind.empty() ? "regularity" : o.kind;
  std::size_t x = o.point.empty() ? 0 : flag_point(inst.space, o.point);
  if (kind == "regularity") {
    auto r = diametric_regularity_probe(inst, x);
    em.report(to_json(inst.space, r));
    return r.consistent ? 0 : 1;
  }
  if (kind == "ball-diameter") {
    auto r = ball_diameter_probe(inst, x);
    em.report(to_json(inst.space, r));
    return r.contradicts_lemma ? 1 : 0;
  }
  if (kind == "spherical") {
    ExtReal alpha = o.alpha.empty() ? (inst.gauge.is_diameter_power() ? inst.gauge.alpha() : ExtReal(1))
                                    : flag_value(o.alpha, "--alpha");
    ExtReal c = flag_value(o.c_alpha, "--c-alpha");
    std::vector<std::size_t> points;
    if (o.point.empty()) {
      for (std::size_t i = 0; i < inst.size(); ++i) points.push_back(i);
    } else {
      points.push_back(x);
    }
    auto r = spherical_density_comparison(inst, alpha, c, points);
    em.report(to_json(inst.space, r));
    return r.max_relative_gap <= flag_double(o.tolerance, "--tolerance") ? 0 : 1;
  }
  if (kind == "semicontinuity") {
    if (o.delta.empty() || o.t.empty()) throw InputError("--kind", "semicontinuity needs --delta and --t");
    Analysis analysis(with_alpha(inst, o));
    auto r = semicontinuity_probe(analysis, flag_set(inst.space, o.domain, "--domain"), flag_value(o.delta, "--delta"),
                                  flag_value(o.t, "--t"));
    em.report(to_json(inst.space, r));
    return r.passed ? 0 : 1;
  }
  throw InputError("--kind", "unknown probe '" + kind + "'");
}

struct GenFlags {
  std::string kind;
  int depth = 0;
  std::size_t dim = 1, n = 4, extra = 3;
  std::string h = "1/4", max_radius;
  bool masked = false;
};

int cmd_gen(const Common& o, const GenFlags& g, const Emitter& em) {
  auto kind = parse_generator(g.kind);
  if (!kind) throw InputError("kind", "unknown generator '" + g.kind + "'");
  GeneratorSpec spec;
  spec.kind = *kind;
  spec.depth = g.depth;
  spec.dimension = g.dim;
  spec.h = flag_value(g.h, "--h");
  if (!g.max_radius.empty()) spec.max_radius = flag_value(g.max_radius, "--max-radius");
  spec.n = g.n;
  spec.seed = o.seed;
  spec.extra_sets = g.extra;
  spec.masked_atom = g.masked;
  if (!o.backend.empty()) spec.backend = flag_backend(o.backend);
  if (!o.alpha.empty()) spec.alpha = flag_value(o.alpha, "--alpha");
  spec.c_alpha = flag_value(o.c_alpha, "--c-alpha");
  MetricInstance inst;
  try {
    inst = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(g.kind, e.what());
  }
  em.write(save_instance(inst));
  return 0;
}

struct HuntFlags {
  std::size_t instances = 100, threads = 0, max_points = 8;
};

int cmd_hunt(const Common& o, const HuntFlags& h, const Emitter& em) {
  HuntOptions options;
  options.seed = o.seed;
  options.instances = h.instances;
  options.threads = h.threads;
  options.max_points = h.max_points;
  options.variant = flag_variant(o.variant);
  auto summary = hunt(options);
  Json doc = {{"seed", o.seed}, {"variant", std::string(to_string(options.variant))}};
  doc.update(to_json(summary));
  em.report(doc);
  return summary.count(true, Verdict::Violated) == 0 ? 0 : 1;
}

void instance_options(CLI::App* cmd, Common& o) {
  cmd->add_option("instance", o.instance_path, "instance JSON file")->required();
  cmd->add_option("--backend", o.backend, "rational or float");
  cmd->add_option("--tau", o.tau, "enlargement factor, > 1");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Caratheodory measures, Federer densities and area formulas on finite metric instances", "areaform"};
  app.require_subcommand(1);
  Common o;
  GenFlags g;
  HuntFlags h;

  auto* measure = app.add_subcommand("measure", "psi (or phi at --delta) of a set");
  instance_options(measure, o);
  measure->add_option("--delta", o.delta);
  measure->add_option("--alpha", o.alpha, "use c_alpha diam^alpha as gauge");
  measure->add_option("--c-alpha", o.c_alpha);
  measure->add_option("--set", o.set, "comma-separated point ids (default: all)");
  measure->add_flag("--profile", o.profile, "CSV of phi against delta");

  auto* density = app.add_subcommand("density", "Federer density F(mu, x)");
  instance_options(density, o);
  density->add_option("--point", o.point);
  density->add_option("--alpha", o.alpha);
  density->add_option("--c-alpha", o.c_alpha);
  density->add_flag("--profile", o.profile, "CSV of the covering profile at --point");

  auto* enlarge = app.add_subcommand("enlarge", "enlargement of a set and the (c, eta) search");
  instance_options(enlarge, o);
  enlarge->add_option("--set", o.set)->required();

  auto* area = app.add_subcommand("area-check", "both sides of the area formula for B inside A");
  instance_options(area, o);
  area->add_option("--variant", o.variant, "general-I, general-II, hausdorff-I, ...");
  area->add_option("--set", o.set, "B (default: A)");
  area->add_option("--domain", o.domain, "A (default: all points)");
  area->add_option("--alpha", o.alpha);
  area->add_option("--c-alpha", o.c_alpha);
  area->add_option("--tolerance", o.tolerance, "float mode only");

  auto* lemmas = app.add_subcommand("lemmas", "minor and major lemma at level t");
  instance_options(lemmas, o);
  lemmas->add_option("--t", o.t)->required();
  lemmas->add_option("--set", o.set, "B for the major lemma (default: A)");
  lemmas->add_option("--domain", o.domain, "A for the minor lemma (default: all points)");
  lemmas->add_option("--open", o.open, "V for the major lemma (default: all points)");
  lemmas->add_option("--c", o.c);
  lemmas->add_option("--eta", o.eta);
  lemmas->add_option("--seed", o.seed, "subset sampling seed");

  auto* abscont = app.add_subcommand("abscont", "absolute continuity against mu of the infinite-density set");
  instance_options(abscont, o);
  abscont->add_option("--domain", o.domain);
  abscont->add_option("--seed", o.seed);

  auto* probe = app.add_subcommand("probe", "regularity, ball-diameter, spherical or semicontinuity probe");
  instance_options(probe, o);
  probe->add_option("--kind", o.kind, "regularity (default), ball-diameter, spherical, semicontinuity");
  probe->add_option("--point", o.point);
  probe->add_option("--domain", o.domain);
  probe->add_option("--delta", o.delta);
  probe->add_option("--t", o.t);
  probe->add_option("--alpha", o.alpha);
  probe->add_option("--c-alpha", o.c_alpha);
  probe->add_option("--tolerance", o.tolerance);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->set_help_flag("--help", "Print this help message and exit");
  gen->add_option("kind", g.kind, "cantor, sierpinski, epsilon-net, random-metric, singleton-complete")->required();
  gen->add_option("--depth", g.depth);
  gen->add_option("--dim", g.dim);
  gen->add_option("--h", g.h);
  gen->add_option("--max-radius", g.max_radius);
  gen->add_option("--n", g.n);
  gen->add_option("--extra-sets", g.extra);
  gen->add_flag("--masked-atom", g.masked);
  gen->add_option("--seed", o.seed);
  gen->add_option("--backend", o.backend);
  gen->add_option("--alpha", o.alpha);
  gen->add_option("--c-alpha", o.c_alpha);

  auto* hunt_cmd = app.add_subcommand("hunt", "random search for area-formula violations");
  hunt_cmd->add_option("--seed", o.seed);
  hunt_cmd->add_option("--instances", h.instances);
  hunt_cmd->add_option("--variant", o.variant);
  hunt_cmd->add_option("--threads", h.threads);
  hunt_cmd->add_option("--max-points", h.max_points);

  for (auto* cmd : {measure, density, enlarge, area, lemmas, abscont, probe, gen, hunt_cmd}) {
    cmd->add_option("--out", o.out, "json, csv, or a file path (.csv selects CSV)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Emitter em = make_emitter(o.out, out);
    if (measure->parsed()) return cmd_measure(o, em);
    if (density->parsed()) return cmd_density(o, em);
    if (enlarge->parsed()) return cmd_enlarge(o, em);
    if (area->parsed()) return cmd_area_check(o, em);
    if (lemmas->parsed()) return cmd_lemmas(o, em);
    if (abscont->parsed()) return cmd_abscont(o, em);
    if (probe->parsed()) return cmd_probe(o, em);
    if (gen->parsed()) return cmd_gen(o, g, em);
    if (hunt_cmd->parsed()) return cmd_hunt(o, h, em);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResolutionTooCoarseError& e) {
    err << "error: resolution too coarse: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace areaform
