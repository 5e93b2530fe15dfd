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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "areaform/density.hpp"
#include "areaform/instance.hpp"

namespace areaform {

/// A probe needs a resolution the instance does not have.
class ResolutionTooCoarseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GeneratorKind { Cantor, Sierpinski, EpsilonNet, RandomMetric, SingletonComplete };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator(std::string_view text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::SingletonComplete;
  int depth = 0;                     // cantor, sierpinski
  std::size_t dimension = 1;         // epsilon-net: the region [0, 1]^dimension
  ExtReal h = ExtReal(1, 4);         // epsilon-net spacing; 1 / h must be an integer
  std::optional<ExtReal> max_radius; // epsilon-net ball radii (default 4h)
  std::size_t n = 4;                 // random-metric, singleton-complete
  std::uint64_t seed = 0;
  Backend backend = Backend::Rational;
  std::optional<ExtReal> alpha;      // diameter gauge exponent (default per kind)
  ExtReal c_alpha = ExtReal(1);
  std::size_t extra_sets = 3;        // singleton-complete: random sets beyond the singletons and X
  bool masked_atom = false;          // singleton-complete: drop the singleton of one charged point

  void validate() const;
};

/// Builds the instance described by `spec`; a deterministic function of it.
///
/// cantor(d): the midpoints of the 2^d construction intervals of depth d, and
/// the triadic intervals of depth <= d meeting the construction, each mapped to
/// the representatives it contains (empty ones are left out). Members carry
/// their interval length 3^-k as gauge scale; the gauge is the Hausdorff one
/// with alpha = ln 2 / ln 3.
/// sierpinski(d): centroids of the 3^d triangles of depth d, the triangles of
/// depth <= d as family with scale 2^-k, alpha = ln 3 / ln 2.
/// epsilon-net: the h-grid of [0, 1]^dim with positive-diameter closed balls
/// up to max_radius, uniform mass h^dim, spherical gauge of exponent dim and
/// resolution h.
/// random-metric: shortest-path completion of a random symmetric matrix, all
/// closed balls, Hausdorff gauge, random masses.
/// singleton-complete: a random metric with every singleton, a few random
/// sets and X itself, all with positive explicit weights, and positive masses.
MetricInstance generate(const GeneratorSpec& spec);

struct RegularityReport {
  std::size_t point = 0;
  double probe_radius = 0;    // R_x: centers within this distance of x
  double max_radius = 0;      // radii grid runs up to here (delta_x candidate)
  double max_jump = 0;        // largest jump of r -> diam B(y, r) between grid radii
  double slack = 0;           // 4h
  std::size_t centers = 0;
  bool consistent = true;     // every jump <= slack
  std::optional<std::size_t> worst_center;
  double worst_radius = 0;
};

/// Radii offset + k * step, k >= 1, up to max_radius. Zero fields take the
/// defaults in terms of the resolution h.
struct RadiiGrid {
  double probe_radius = 0;  // 0: 4h
  double max_radius = 0;    // 0: 8h
  double step = 0;          // 0: h / 2
  double offset = 0;
};

/// r -> diam(B(y, r)) over a radii grid for every y with d(x, y) < R_x.
/// Throws ResolutionTooCoarseError for instances without a resolution or
/// whose grid cannot resolve the requested radii.
RegularityReport diametric_regularity_probe(const MetricInstance& instance, std::size_t x,
                                            const RadiiGrid& grid = {});

struct BallDiameterSample {
  std::size_t center = 0;
  double radius = 0;
  double open_diameter = 0;
  double closed_diameter = 0;
  bool flagged = false;  // differs by more than the slack
};

struct BallDiameterReport {
  std::size_t point = 0;
  bool regularity_consistent = true;
  bool contradicts_lemma = false;  // flagged although the regularity probe passed
  double max_difference = 0;
  std::size_t flagged = 0;
  std::vector<BallDiameterSample> samples;
};

/// diam B(y, r) against diam of the closed ball, over the same grid.
BallDiameterReport ball_diameter_probe(const MetricInstance& instance, std::size_t x, const RadiiGrid& grid = {});

struct DensityComparisonPoint {
  std::size_t point = 0;
  ExtReal scale;             // finest diameter present in both profiles
  ExtReal closed_value;      // s^alpha profile at that scale
  ExtReal open_value;        // F^{zeta_o} profile at that scale
  double relative_gap = 0;
  DensityProfile closed;
  DensityProfile open;
};

struct DensityComparisonReport {
  std::vector<DensityComparisonPoint> points;
  double max_relative_gap = 0;
};

/// Profiles of the spherical density over closed balls and of the density
/// over open balls at each probe point. Throws
/// NotFineError where the closed-ball relation is not fine at resolution.
DensityComparisonReport spherical_density_comparison(const MetricInstance& instance, const ExtReal& alpha,
                                                     const ExtReal& c_alpha,
                                                     const std::vector<std::size_t>& probe_points);

}  // namespace areaform
