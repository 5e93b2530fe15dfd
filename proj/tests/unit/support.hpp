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

// Small instance builders and brute-force oracles shared by the tests. The
// oracles deliberately avoid the library's solver and density code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "areaform/areaform.hpp"

namespace testing_support {

using namespace areaform;

inline std::vector<std::string> ids(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

/// Points on a line at the given rational positions.
inline FiniteMetricSpace line(const std::vector<Rational>& xs) {
  std::vector<Coordinates> coords;
  for (const auto& x : xs) coords.push_back(Coordinates::from_exact({x}));
  return FiniteMetricSpace::euclidean(ids(xs.size()), std::move(coords));
}

/// n points, all pairwise distances 1.
inline FiniteMetricSpace discrete(std::size_t n) {
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n, ExtReal(1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = ExtReal();
  return FiniteMetricSpace::from_matrix(ids(n), std::move(d));
}

inline PointSet set_of(std::size_t n, std::initializer_list<std::size_t> members) { return PointSet(n, members); }

inline PointSet singleton(std::size_t n, std::size_t i) { return PointSet(n, {i}); }

/// Family of the singletons only, with explicit weights.
inline MetricInstance singleton_instance(const std::vector<ExtReal>& masses, const std::vector<ExtReal>& weights) {
  MetricInstance inst;
  const std::size_t n = masses.size();
  inst.space = discrete(n);
  inst.gauge = Gauge::explicit_table({});
  for (std::size_t i = 0; i < n; ++i) inst.family.members.push_back({singleton(n, i), weights[i], {}, {}});
  inst.measure = AtomicMeasure::atomic(masses);
  return inst;
}

/// Minimum gauge sum over all subfamilies of admissible members, by plain
/// enumeration of bitmasks over the family.
inline ExtReal exhaustive_phi(const GaugedFamily& family, const ExtReal& delta, const PointSet& target) {
  if (target.empty()) return ExtReal();
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].diameter <= delta) usable.push_back(i);
  }
  ExtReal best = ExtReal::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << usable.size()); ++mask) {
    PointSet covered(family.universe());
    ExtReal sum = family.is_exact() ? ExtReal() : ExtReal::from_double(0);
    for (std::size_t k = 0; k < usable.size(); ++k) {
      if (mask >> k & 1) {
        covered |= family[usable[k]].set;
        sum += family[usable[k]].zeta;
      }
    }
    if (target.is_subset_of(covered) && sum < best) best = sum;
  }
  return best;
}

/// psi by exhaustive phi at delta = each positive member diameter and at a
/// tiny delta standing for delta -> 0 (test instances keep diameters above
/// 1e-6). phi is constant between consecutive diameters.
inline ExtReal exhaustive_psi(const GaugedFamily& family, const PointSet& target) {
  std::vector<ExtReal> deltas{ExtReal(1, 1000000)};
  for (const auto& m : family) {
    if (!m.diameter.is_zero()) deltas.push_back(m.diameter);
  }
  ExtReal best;
  for (const auto& d : deltas) best = max(best, exhaustive_phi(family, d, target));
  return best;
}

/// F at x on an exact instance, from the definition: the sup of mu/zeta over
/// the diameter-0 members containing x that are not 0/0 or inf/inf.
inline std::optional<ExtReal> oracle_density(const MetricInstance& inst, std::size_t x) {
  auto family = inst.gauged_family();
  std::optional<ExtReal> best;
  for (const auto& m : family) {
    if (!m.set.contains(x) || !m.diameter.is_zero()) continue;
    ExtReal mu = inst.measure(m.set);
    if ((mu.is_zero() && m.zeta.is_zero()) || (mu.is_infinite() && m.zeta.is_infinite())) continue;
    ExtReal q = m.zeta.is_zero() ? ExtReal::infinity() : m.zeta.is_infinite() ? ExtReal() : mu / m.zeta;
    if (!best || q > *best) best = q;
  }
  return best;
}

/// The integral of g over b against exhaustive psi, summing g-levels from the
/// lowest up: sum over ascending levels s_j of (s_j - s_{j-1}) psi({g >= s_j}).
inline ExtReal oracle_integral(const GaugedFamily& family, const std::vector<ExtReal>& g, const PointSet& b) {
  std::set<ExtReal> levels;
  b.for_each([&](std::size_t x) { levels.insert(g[x]); });
  ExtReal total, previous;
  for (const auto& s : levels) {
    if (s.is_zero()) continue;
    PointSet upper(b.universe());
    b.for_each([&](std::size_t x) {
      if (g[x] >= s) upper.insert(x);
    });
    total += (s - previous) * exhaustive_psi(family, upper);
    previous = s;
  }
  return total;
}

inline ExtReal random_rational(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return ExtReal(dist(rng), den);
}

}  // namespace testing_support
