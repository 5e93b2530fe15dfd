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
#include <optional>
#include <vector>

#include "areaform/ext_real.hpp"
#include "areaform/gauge.hpp"
#include "areaform/metric_space.hpp"
#include "areaform/point_set.hpp"

namespace areaform {

enum class Certificate { Exact, GreedyUpperBound };

std::string_view to_string(Certificate certificate);

/// A delta-covering of minimal gauge sum, or +inf with an empty cover when no
/// admissible covering exists.
struct CoverSolution {
  ExtReal value;
  std::vector<std::size_t> cover;  // indices into the family
  Certificate certificate = Certificate::Exact;
  std::size_t nodes = 0;           // search nodes expanded
};

struct SolverOptions {
  /// Stop after this many nodes and report the incumbent as an upper bound.
  /// 0 means unlimited.
  std::size_t node_limit = 0;
  bool greedy_only = false;
  /// psi only: smallest delta probed. Resolution instances set it to their
  /// fineness floor, so psi is the supremum over the resolved scales.
  std::optional<ExtReal> delta_floor;
};

/// phi_{zeta,delta}(target): the least gauge sum over subfamilies whose
/// members have diameter <= delta and jointly contain `target`.
///
/// Exact branch-and-bound: branches on the uncovered point with the fewest
/// candidate sets, tries candidates cheapest first, and prunes with the greedy
/// incumbent and a dual-feasible bound of the fractional covering relaxation
/// (each uncovered point charged the cheapest per-point price of a set that
/// contains it). Members with zeta = +inf are never used.
CoverSolution phi(const GaugedFamily& family, const ExtReal& delta, const PointSet& target,
                  const SolverOptions& options = {});

/// Greedy cover (cheapest price per newly covered point); an upper bound on phi.
CoverSolution greedy_cover(const GaugedFamily& family, const ExtReal& delta, const PointSet& target);

struct PsiProbe {
  ExtReal delta;
  CoverSolution solution;
};

struct PsiResult {
  ExtReal value;
  std::vector<PsiProbe> probes;  // ordered by increasing delta
};

/// Deltas at which phi is sampled: one below the smallest positive member
/// diameter, one between each consecutive pair, one above the largest.
std::vector<ExtReal> delta_probes(const GaugedFamily& family);

/// psi_zeta(target) = sup over delta > 0 of phi. phi is a step function of
/// delta that only changes at member diameters, so the maximum over
/// delta_probes() is the supremum. psi_profile() keeps phi at every probe;
/// psi() solves only at the smallest one.
PsiResult psi_profile(const GaugedFamily& family, const PointSet& target, const SolverOptions& options = {});
ExtReal psi(const GaugedFamily& family, const PointSet& target, const SolverOptions& options = {});

/// H^alpha(target) with the Hausdorff gauge over `family` (on a finite space
/// every set is closed).
ExtReal hausdorff_measure(const FiniteMetricSpace& space, const ExtReal& alpha, const ExtReal& c_alpha,
                          const Family& family, const PointSet& target);
/// S^alpha(target) over the generated closed-ball family.
ExtReal spherical_measure(const FiniteMetricSpace& space, const ExtReal& alpha, const ExtReal& c_alpha,
                          const PointSet& target);

}  // namespace areaform
