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

#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace areaform;
using namespace testing_support;

namespace {

GeneratorSpec net(std::size_t dim, long m) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::EpsilonNet;
  spec.dimension = dim;
  spec.h = ExtReal(1, m);
  return spec;
}

}  // namespace

TEST_CASE("cantor construction counts") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cantor;
  spec.depth = 1;
  auto inst = generate(spec);
  CHECK(inst.size() == 2);
  CHECK(inst.metadata.at("triadic_intervals") == "4");
  CHECK(inst.metadata.at("empty_intervals_dropped") == "1");
  CHECK(inst.family.members.size() == 3);

  for (int d = 0; d <= 5; ++d) {
    spec.depth = d;
    auto c = generate(spec);
    CHECK(c.size() == (std::size_t{1} << d));
    // Triadic intervals of depth k meeting C_d, counted by brute force over k.
    std::size_t listed = 0;
    for (int k = 0; k <= d; ++k) {
      const long count = std::lround(std::pow(3.0, k));
      for (long j = 0; j < count; ++j) {
        Rational lo(j, count), hi(j + 1, count);
        bool hit = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
          Rational x = c.space.coordinates(i).exact[0];
          hit = hit || (lo <= x && x <= hi);
        }
        listed += hit;
      }
    }
    CHECK(c.family.members.size() == listed);
  }
}

TEST_CASE("cantor depth-k covers have gauge sum one") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cantor;
  spec.depth = 5;
  auto inst = generate(spec);
  auto family = inst.gauged_family();
  std::map<std::string, double> sums;
  for (const auto& m : inst.family.members) {
    auto k = std::lround(-std::log(m.scale->to_double()) / std::log(3.0));
    sums[std::to_string(k)] += inst.gauge.of_diameter(*m.scale).to_double();
  }
  CHECK(sums.size() == 6);
  for (const auto& [k, s] : sums) CHECK(std::abs(s - 1.0) <= 1e-12);
}

TEST_CASE("epsilon-net and random metric") {
  auto grid = generate(net(1, 4));
  CHECK(grid.size() == 5);
  CHECK(grid.resolution == ExtReal(1, 4));
  CHECK(generate(net(2, 4)).size() == 25);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomMetric;
    spec.n = 4 + seed % 5;
    spec.seed = seed;
    auto inst = generate(spec);
    const auto& s = inst.space;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s.distance(i, i) == ExtReal());
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(s.distance(i, j) == s.distance(j, i));
        if (i != j) CHECK(s.distance(i, j) > ExtReal());
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(s.distance(i, k) <= s.distance(i, j) + s.distance(j, k));
      }
    }
  }
  GeneratorSpec bad = net(1, 4);
  bad.h = ExtReal(2, 5);
  CHECK_THROWS(generate(bad));
  bad = GeneratorSpec{};
  bad.n = 0;
  CHECK_THROWS(generate(bad));
}

TEST_CASE("generators are deterministic") {
  for (auto kind : {GeneratorKind::RandomMetric, GeneratorKind::SingletonComplete}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.n = 6;
    spec.seed = 42;
    auto a = generate(spec), b = generate(spec);
    CHECK(a.space.matrix() == b.space.matrix());
    REQUIRE(a.family.members.size() == b.family.members.size());
    for (std::size_t i = 0; i < a.family.members.size(); ++i) {
      CHECK(a.family.members[i].set == b.family.members[i].set);
      CHECK(a.family.members[i].zeta == b.family.members[i].zeta);
    }
    CHECK(a.measure.masses() == b.measure.masses());
    spec.seed = 43;
    CHECK(generate(spec).space.matrix() != a.space.matrix());
  }
}

TEST_CASE("diametric regularity probe") {
  auto square = generate(net(2, 16));
  auto report = diametric_regularity_probe(square, 100);
  CHECK(report.consistent);
  CHECK(report.max_jump <= 4.0 / 16);

  // Two clusters far apart: the open-ball diameter jumps across the gap.
  MetricInstance clusters;
  std::vector<Rational> xs;
  for (int i = 0; i <= 4; ++i) xs.push_back(Rational(i, 16));
  for (int i = 0; i <= 4; ++i) xs.push_back(Rational(1) + Rational(i, 16));
  clusters.space = line(xs);
  clusters.family = closed_ball_family(clusters.space);
  clusters.measure = AtomicMeasure::atomic(std::vector<ExtReal>(xs.size(), ExtReal(1)));
  clusters.resolution = ExtReal(1, 16);
  RadiiGrid wide;
  wide.max_radius = 1.5;
  auto gap = diametric_regularity_probe(clusters, 4, wide);
  CHECK_FALSE(gap.consistent);
  CHECK(gap.max_jump > 4.0 / 16);

  MetricInstance one;
  one.space = line({Rational(0)});
  one.family = closed_ball_family(one.space);
  one.measure = AtomicMeasure::atomic({ExtReal(1)});
  one.resolution = ExtReal(1, 8);
  CHECK(diametric_regularity_probe(one, 0).consistent);

  MetricInstance exact = one;
  exact.resolution.reset();
  CHECK_THROWS_AS(diametric_regularity_probe(exact, 0), ResolutionTooCoarseError);
}

TEST_CASE("ball diameter probe") {
  auto grid = generate(net(1, 32));
  RadiiGrid off;
  off.offset = 1.0 / 128;  // radii never equal a grid distance
  off.step = 1.0 / 32;
  auto report = ball_diameter_probe(grid, 16, off);
  CHECK(report.regularity_consistent);
  CHECK(report.max_difference == 0);
  CHECK(report.flagged == 0);

  // Radii on the distance spectrum differ by at most one grid step.
  auto on = ball_diameter_probe(grid, 16);
  CHECK(on.flagged == 0);
  CHECK(on.max_difference > 0);
  CHECK(on.max_difference <= 4.0 / 32);

  MetricInstance d;
  d.space = discrete(4);
  d.family = closed_ball_family(d.space);
  d.measure = AtomicMeasure::atomic(std::vector<ExtReal>(4, ExtReal(1)));
  d.resolution = ExtReal(1, 8);
  RadiiGrid unit;
  unit.max_radius = 2;
  auto flagged = ball_diameter_probe(d, 0, unit);
  CHECK(flagged.flagged > 0);
  CHECK_FALSE(flagged.regularity_consistent);
  CHECK_FALSE(flagged.contradicts_lemma);
  bool at_one = false;
  for (const auto& s : flagged.samples) {
    if (s.flagged && std::abs(s.radius - 1.0) < 1e-12) at_one = s.open_diameter == 0 && s.closed_diameter == 1;
  }
  CHECK(at_one);
}

TEST_CASE("spherical and open-ball densities") {
  auto grid = generate(net(1, 64));
  grid.backend = Backend::Float;
  std::vector<std::size_t> probes{0, 10, 32, 64};
  auto report = spherical_density_comparison(grid, ExtReal(1), ExtReal(1), probes);
  REQUIRE(report.points.size() == 4);
  CHECK(report.max_relative_gap <= 1e-6);

  std::vector<ExtReal> masses(grid.size(), ExtReal());
  masses[32] = ExtReal(1);
  grid.measure = AtomicMeasure::atomic(masses);
  auto atom = spherical_density_comparison(grid, ExtReal(1), ExtReal(1), {32});
  CHECK(atom.points[0].closed_value == atom.points[0].open_value);
  CHECK(atom.points[0].closed_value > ExtReal(1));

  CHECK(spherical_density_comparison(grid, ExtReal(1), ExtReal(1), {}).points.empty());
}

TEST_CASE("hunt finds no counterexamples") {
  HuntOptions options;
  options.seed = 5;
  options.instances = 60;
  options.max_points = 6;
  options.threads = 2;
  auto summary = hunt(options);
  CHECK(summary.instances == 60);
  CHECK(summary.count(true, Verdict::Violated) == 0);
  CHECK(summary.counterexamples.empty());
  CHECK(summary.count(true, Verdict::Equal) > 0);
  CHECK(summary.minor.violations == 0);
  CHECK(summary.major.violations == 0);
  CHECK(summary.constructed > 0);
  CHECK(summary.constructed_gate_failures == summary.constructed);
  CHECK(summary.constructed_silent_passes == 0);

  // Same seed, one thread: same table.
  options.threads = 1;
  CHECK(hunt(options).table == summary.table);

  options.instances = 0;
  auto empty = hunt(options);
  CHECK(empty.table.empty());
  CHECK(empty.cases.empty());
}

TEST_CASE("restrict_instance keeps the metric") {
  GeneratorSpec spec;
  spec.n = 6;
  spec.seed = 9;
  auto inst = generate(spec);
  PointSet keep(6, {1, 3, 4});
  auto small = restrict_instance(inst, keep);
  CHECK(small.size() == 3);
  CHECK(small.space.distance(0, 2) == inst.space.distance(1, 4));
  CHECK(small.measure.mass(1) == inst.measure.mass(3));
}
