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

#include "areaform/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace areaform {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Cantor: return "cantor";
    case GeneratorKind::Sierpinski: return "sierpinski";
    case GeneratorKind::EpsilonNet: return "epsilon-net";
    case GeneratorKind::RandomMetric: return "random-metric";
    case GeneratorKind::SingletonComplete: return "singleton-complete";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator(std::string_view text) {
  for (auto k : {GeneratorKind::Cantor, GeneratorKind::Sierpinski, GeneratorKind::EpsilonNet,
                 GeneratorKind::RandomMetric, GeneratorKind::SingletonComplete}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

void GeneratorSpec::validate() const {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  switch (kind) {
    case GeneratorKind::Cantor:
      if (depth > 10) throw std::invalid_argument("cantor depth limited to 10");
      break;
    case GeneratorKind::Sierpinski:
      if (depth > 7) throw std::invalid_argument("sierpinski depth limited to 7");
      break;
    case GeneratorKind::EpsilonNet: {
      if (dimension < 1 || dimension > 3) throw std::invalid_argument("epsilon-net dimension must be 1, 2 or 3");
      if (h.is_zero() || h.is_infinite() || h > ExtReal(1)) throw std::invalid_argument("h must lie in (0, 1]");
      if (!h.is_exact() || h.rational().get_num() != 1) {
        throw std::invalid_argument("h must be 1/m for an integer m, got " + h.to_string());
      }
      break;
    }
    case GeneratorKind::RandomMetric:
    case GeneratorKind::SingletonComplete:
      if (n > 64) throw std::invalid_argument("n limited to 64");
      break;
  }
  if (alpha && (alpha->is_zero() || alpha->is_infinite())) throw std::invalid_argument("alpha must be positive");
}

namespace {

using Rng = std::mt19937_64;

// Uniform on [lo, hi] by modulo: portable across standard libraries.
std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

ExtReal random_positive(Rng& rng) {
  return ExtReal(static_cast<std::int64_t>(pick(rng, 1, 20)), static_cast<std::int64_t>(pick(rng, 1, 5)));
}

std::vector<std::string> point_ids(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

ExtReal alpha_or(const GeneratorSpec& spec, double fallback) {
  return spec.alpha ? *spec.alpha : ExtReal::from_double(fallback);
}

MetricInstance cantor(const GeneratorSpec& spec) {
  const int d = spec.depth;
  // Construction intervals of depth d as [left, left + 3^-d].
  std::vector<Rational> lefts{Rational(0)};
  Rational len(1);
  for (int k = 0; k < d; ++k) {
    len /= 3;
    std::vector<Rational> next;
    for (const auto& a : lefts) {
      next.push_back(a);
      next.push_back(a + 2 * len);
    }
    lefts = std::move(next);
  }
  const std::size_t n = lefts.size();
  std::vector<Rational> mids;
  std::vector<Coordinates> coords;
  for (const auto& a : lefts) {
    mids.push_back(a + len / 2);
    coords.push_back(Coordinates::from_exact({mids.back()}));
  }

  MetricInstance inst;
  inst.space = FiniteMetricSpace::euclidean(point_ids(n), std::move(coords), spec.backend);
  std::size_t enumerated = 0, empty = 0;
  Rational side(1);
  for (int k = 0; k <= d; ++k) {
    const long count = std::lround(std::pow(3.0, k));
    for (long j = 0; j < count; ++j) {
      Rational lo = side * j, hi = side * (j + 1);
      bool meets = std::any_of(lefts.begin(), lefts.end(), [&](const Rational& a) { return a <= hi && lo <= a + len; });
      if (!meets) continue;
      ++enumerated;
      PointSet members(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (lo <= mids[i] && mids[i] <= hi) members.insert(i);
      }
      if (members.empty()) {
        ++empty;
        continue;
      }
      inst.family.members.push_back({std::move(members), std::nullopt, ExtReal(side), std::nullopt});
    }
    side /= 3;
  }
  inst.gauge = Gauge::hausdorff(alpha_or(spec, std::log(2.0) / std::log(3.0)), spec.c_alpha);
  inst.measure = AtomicMeasure::atomic(std::vector<ExtReal>(n, ExtReal(Rational(Rational(1) / Rational(mpz_class(1) << d)))));
  inst.backend = inst.gauge.alpha().is_exact() ? spec.backend : Backend::Float;
  inst.metadata["generator"] = "cantor";
  inst.metadata["depth"] = std::to_string(d);
  inst.metadata["triadic_intervals"] = std::to_string(enumerated);
  inst.metadata["empty_intervals_dropped"] = std::to_string(empty);
  inst.metadata["gauge_override"] = "member scale = interval length 3^-k";
  return inst;
}

MetricInstance sierpinski(const GeneratorSpec& spec) {
  struct Triangle {
    std::array<double, 2> a, b, c;
  };
  const int d = spec.depth;
  // Triangles per depth; children of triangle i at depth k are 3i..3i+2.
  std::vector<std::vector<Triangle>> levels{{Triangle{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}}};
  auto mid = [](const std::array<double, 2>& p, const std::array<double, 2>& q) {
    return std::array<double, 2>{(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
  };
  for (int k = 0; k < d; ++k) {
    std::vector<Triangle> next;
    for (const auto& t : levels.back()) {
      auto ab = mid(t.a, t.b), bc = mid(t.b, t.c), ca = mid(t.c, t.a);
      next.push_back({t.a, ab, ca});
      next.push_back({ab, t.b, bc});
      next.push_back({ca, bc, t.c});
    }
    levels.push_back(std::move(next));
  }
  const auto& leaves = levels.back();
  const std::size_t n = leaves.size();
  std::vector<Coordinates> coords;
  for (const auto& t : leaves) {
    coords.push_back(Coordinates::from_approx({(t.a[0] + t.b[0] + t.c[0]) / 3, (t.a[1] + t.b[1] + t.c[1]) / 3}));
  }
  MetricInstance inst;
  inst.space = FiniteMetricSpace::euclidean(point_ids(n), std::move(coords), Backend::Float);
  for (int k = 0; k <= d; ++k) {
    const std::size_t span = n / levels[k].size();
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      PointSet members(n);
      for (std::size_t j = i * span; j < (i + 1) * span; ++j) members.insert(j);
      inst.family.members.push_back(
          {std::move(members), std::nullopt, ExtReal::from_double(std::ldexp(1.0, -k)), std::nullopt});
    }
  }
  inst.gauge = Gauge::hausdorff(alpha_or(spec, std::log(3.0) / std::log(2.0)), spec.c_alpha.to_float());
  inst.measure = AtomicMeasure::atomic(std::vector<ExtReal>(n, ExtReal::from_double(1.0 / static_cast<double>(n))));
  inst.backend = Backend::Float;
  inst.metadata["generator"] = "sierpinski";
  inst.metadata["depth"] = std::to_string(d);
  inst.metadata["gauge_override"] = "member scale = triangle side 2^-k";
  return inst;
}

MetricInstance epsilon_net(const GeneratorSpec& spec) {
  const long m = spec.h.rational().get_den().get_si();
  const std::size_t dim = spec.dimension;
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim; ++k) n *= static_cast<std::size_t>(m + 1);
  std::vector<Coordinates> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> x;
    std::size_t rest = i;
    for (std::size_t k = 0; k < dim; ++k) {
      Rational q(static_cast<long>(rest % static_cast<std::size_t>(m + 1)), m);
      q.canonicalize();
      x.push_back(q);
      rest /= static_cast<std::size_t>(m + 1);
    }
    coords.push_back(Coordinates::from_exact(std::move(x)));
  }
  MetricInstance inst;
  inst.space = FiniteMetricSpace::euclidean(point_ids(n), std::move(coords), spec.backend);
  ExtReal h = spec.h.with_backend(spec.backend);
  ExtReal max_radius = spec.max_radius ? *spec.max_radius : h * ExtReal(4);
  inst.family = closed_ball_family(inst.space, max_radius.with_backend(spec.backend), true);
  ExtReal alpha = spec.alpha ? *spec.alpha : ExtReal(static_cast<int>(dim));
  inst.gauge = Gauge::spherical(alpha, spec.c_alpha);
  ExtReal mass = pow(h, ExtReal(static_cast<int>(dim)));
  inst.measure = AtomicMeasure::atomic(std::vector<ExtReal>(n, mass));
  inst.resolution = h;
  inst.backend = spec.backend;
  inst.metadata["generator"] = "epsilon-net";
  inst.metadata["region"] = "[0,1]^" + std::to_string(dim);
  return inst;
}

FiniteMetricSpace random_metric_space(Rng& rng, std::size_t n) {
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = ExtReal(static_cast<std::int64_t>(pick(rng, 1, 20)), 4);
    }
  }
  // Shortest-path completion restores the triangle inequality.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ExtReal via = d[i][k] + d[k][j];
        if (i != j && via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return FiniteMetricSpace::from_matrix(point_ids(n), std::move(d));
}

MetricInstance random_metric(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  MetricInstance inst;
  inst.space = random_metric_space(rng, spec.n);
  inst.family = closed_ball_family(inst.space);
  inst.gauge = Gauge::hausdorff(spec.alpha ? *spec.alpha : ExtReal(1), spec.c_alpha);
  std::vector<ExtReal> masses;
  for (std::size_t i = 0; i < spec.n; ++i) masses.push_back(random_positive(rng));
  inst.measure = AtomicMeasure::atomic(std::move(masses));
  inst.metadata["generator"] = "random-metric";
  inst.metadata["seed"] = std::to_string(spec.seed);
  return inst;
}

MetricInstance singleton_complete(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  MetricInstance inst;
  inst.space = random_metric_space(rng, n);
  inst.gauge = Gauge::explicit_table({});
  std::set<PointSet> seen;
  for (std::size_t i = 0; i < n; ++i) {
    PointSet s(n, {i});
    seen.insert(s);
    inst.family.members.push_back({std::move(s), random_positive(rng), std::nullopt, std::nullopt});
  }
  if (n >= 2) {
    for (std::size_t k = 0; k < spec.extra_sets; ++k) {
      PointSet s(n);
      while (s.size() < 2) s.insert(pick(rng, 0, n - 1));
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) s.insert(i);
      }
      if (!seen.insert(s).second) continue;
      inst.family.members.push_back({std::move(s), random_positive(rng), std::nullopt, std::nullopt});
    }
    if (seen.insert(inst.space.all()).second) {
      inst.family.members.push_back({inst.space.all(), random_positive(rng), std::nullopt, std::nullopt});
    }
  }
  std::vector<ExtReal> masses;
  for (std::size_t i = 0; i < n; ++i) masses.push_back(random_positive(rng));
  inst.measure = AtomicMeasure::atomic(std::move(masses));
  if (spec.masked_atom) {
    std::size_t x = pick(rng, 0, n - 1);
    inst.family.members.erase(inst.family.members.begin() + static_cast<std::ptrdiff_t>(x));
    inst.metadata["masked_atom"] = inst.space.id(x);
  }
  inst.metadata["generator"] = "singleton-complete";
  inst.metadata["seed"] = std::to_string(spec.seed);
  return inst;
}

}  // namespace

MetricInstance generate(const GeneratorSpec& spec) {
  spec.validate();
  MetricInstance inst;
  switch (spec.kind) {
    case GeneratorKind::Cantor: inst = cantor(spec); break;
    case GeneratorKind::Sierpinski: inst = sierpinski(spec); break;
    case GeneratorKind::EpsilonNet: inst = epsilon_net(spec); break;
    case GeneratorKind::RandomMetric: inst = random_metric(spec); break;
    case GeneratorKind::SingletonComplete: inst = singleton_complete(spec); break;
  }
  if (spec.kind != GeneratorKind::Cantor && spec.kind != GeneratorKind::Sierpinski) inst.backend = spec.backend;
  if (spec.backend == Backend::Float) inst.measure = inst.measure.with_backend(Backend::Float);
  inst.validate();
  return inst;
}

namespace {

struct Grid {
  double h, probe_radius, max_radius, step, offset;
};

Grid resolve_grid(const MetricInstance& instance, const RadiiGrid& grid) {
  if (!instance.resolution) throw ResolutionTooCoarseError("instance has no resolution floor h");
  const double h = instance.resolution->to_double();
  Grid g{h, grid.probe_radius > 0 ? grid.probe_radius : 4 * h, grid.max_radius > 0 ? grid.max_radius : 8 * h,
         grid.step > 0 ? grid.step : h / 2, grid.offset};
  if (g.max_radius < h) throw ResolutionTooCoarseError("radii grid ends below the resolution h");
  return g;
}

std::vector<double> grid_radii(const Grid& g) {
  std::vector<double> radii;
  for (int k = 1;; ++k) {
    double r = g.offset + k * g.step;
    if (r > g.max_radius * (1 + 1e-12)) break;
    radii.push_back(r);
  }
  return radii;
}

// diam of {z : d(y, z) < r} (or <=) for each radius, growing the ball in
// order of distance from y.
std::vector<double> ball_diameters(const FiniteMetricSpace& space, std::size_t y, const std::vector<double>& radii,
                                   bool open) {
  const std::size_t n = space.size();
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(n);
  for (std::size_t z = 0; z < n; ++z) order.emplace_back(space.distance_approx(y, z), z);
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> members;
  std::vector<double> out;
  double diam = 0;
  std::size_t next = 0;
  for (double r : radii) {
    while (next < n && (open ? order[next].first < r : order[next].first <= r)) {
      std::size_t z = order[next++].second;
      for (std::size_t m : members) diam = std::max(diam, space.distance_approx(m, z));
      members.push_back(z);
    }
    out.push_back(diam);
  }
  return out;
}

std::vector<std::size_t> centers_near(const FiniteMetricSpace& space, std::size_t x, double radius) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (space.distance_approx(x, y) < radius) out.push_back(y);
  }
  return out;
}

}  // namespace

RegularityReport diametric_regularity_probe(const MetricInstance& instance, std::size_t x, const RadiiGrid& grid) {
  Grid g = resolve_grid(instance, grid);
  const auto& space = instance.space;
  if (x >= space.size()) throw std::out_of_range("point index out of range");
  RegularityReport report;
  report.point = x;
  report.probe_radius = g.probe_radius;
  report.max_radius = g.max_radius;
  report.slack = 4 * g.h;
  auto radii = grid_radii(g);
  auto centers = centers_near(space, x, g.probe_radius);
  report.centers = centers.size();
  for (std::size_t y : centers) {
    auto diam = ball_diameters(space, y, radii, true);
    for (std::size_t k = 1; k < diam.size(); ++k) {
      double jump = diam[k] - diam[k - 1];
      if (jump > report.max_jump) {
        report.max_jump = jump;
        report.worst_center = y;
        report.worst_radius = radii[k];
      }
    }
  }
  report.consistent = report.max_jump <= report.slack * (1 + 1e-12);
  return report;
}

BallDiameterReport ball_diameter_probe(const MetricInstance& instance, std::size_t x, const RadiiGrid& grid) {
  Grid g = resolve_grid(instance, grid);
  const auto& space = instance.space;
  BallDiameterReport report;
  report.point = x;
  report.regularity_consistent = diametric_regularity_probe(instance, x, grid).consistent;
  const double slack = 4 * g.h;
  auto radii = grid_radii(g);
  for (std::size_t y : centers_near(space, x, g.probe_radius)) {
    auto open = ball_diameters(space, y, radii, true);
    auto closed = ball_diameters(space, y, radii, false);
    for (std::size_t k = 0; k < radii.size(); ++k) {
      double diff = std::abs(closed[k] - open[k]);
      bool flagged = diff > slack * (1 + 1e-12);
      report.max_difference = std::max(report.max_difference, diff);
      report.flagged += flagged ? 1 : 0;
      report.samples.push_back({y, radii[k], open[k], closed[k], flagged});
    }
  }
  report.contradicts_lemma = report.regularity_consistent && report.flagged > 0;
  return report;
}

namespace {

double relative_gap(const ExtReal& a, const ExtReal& b) {
  if (a == b) return 0.0;
  if (a.is_infinite() || b.is_infinite()) return std::numeric_limits<double>::infinity();
  double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) / std::max(x, y);
}

std::vector<DensityProfile> profiles(const GaugedFamily& family, const FilteredFamily& filtered,
                                     const std::vector<std::size_t>& points, const Fineness& fineness) {
  auto index = membership(family, filtered);
  std::vector<DensityProfile> out;
  for (std::size_t x : points) {
    std::vector<CoveringSample> samples;
    for (std::size_t i : index.at(x)) {
      samples.push_back({family[i].diameter, quotient(filtered.mu[i], family[i].zeta)});
    }
    out.push_back(covering_profile(std::move(samples), fineness));
  }
  return out;
}

}  // namespace

DensityComparisonReport spherical_density_comparison(const MetricInstance& instance, const ExtReal& alpha,
                                                     const ExtReal& c_alpha,
                                                     const std::vector<std::size_t>& probe_points) {
  const auto& space = instance.space;
  std::optional<ExtReal> max_radius = instance.family.max_radius;
  if (!max_radius && instance.resolution) max_radius = *instance.resolution * ExtReal(4);
  const bool positive = instance.family.positive_diameter || instance.resolution.has_value();
  auto closed = GaugedFamily::evaluate(space, closed_ball_family(space, max_radius, positive),
                                       Gauge::spherical(alpha, c_alpha));
  auto open = GaugedFamily::evaluate(space, open_ball_family(space, max_radius, positive),
                                     Gauge::open_spherical(alpha, c_alpha));
  const std::vector<std::size_t>& points = probe_points;
  DensityComparisonReport report;
  if (points.empty()) return report;
  Fineness fineness = Fineness::of(instance);
  auto closed_profiles = profiles(closed, filter_family(instance.measure, closed), points, fineness);
  auto open_profiles = profiles(open, filter_family(instance.measure, open), points, fineness);

  for (std::size_t k = 0; k < points.size(); ++k) {
    auto& c = closed_profiles[k];
    auto& o = open_profiles[k];
    if (!c.fine) throw NotFineError("closed balls are not fine at point " + space.id(points[k]) + " at resolution");
    DensityComparisonPoint entry;
    entry.point = points[k];
    // Finest diameter both profiles share; entries run from coarse to fine.
    bool found = false;
    for (std::size_t i = c.diameters.size(); i-- > 0 && !found;) {
      for (std::size_t j = o.diameters.size(); j-- > 0;) {
        if (o.diameters[j] == c.diameters[i]) {
          entry.scale = c.diameters[i];
          entry.closed_value = c.sup_values[i];
          entry.open_value = o.sup_values[j];
          found = true;
          break;
        }
      }
    }
    if (!found) throw NotFineError("no common scale at point " + space.id(points[k]));
    entry.relative_gap = relative_gap(entry.closed_value, entry.open_value);
    report.max_relative_gap = std::max(report.max_relative_gap, entry.relative_gap);
    entry.closed = std::move(c);
    entry.open = std::move(o);
    report.points.push_back(std::move(entry));
  }
  return report;
}

}  // namespace areaform
