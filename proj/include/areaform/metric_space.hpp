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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "areaform/ext_real.hpp"
#include "areaform/point_set.hpp"

namespace areaform {

/// Raised when a distance matrix or a point list violates the metric axioms.
class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Euclidean coordinates of one point. `exact` is empty in float mode.
struct Coordinates {
  std::vector<Rational> exact;
  std::vector<double> approx;

  static Coordinates from_exact(std::vector<Rational> exact);
  static Coordinates from_approx(std::vector<double> approx) { return {{}, std::move(approx)}; }
};

/// A finite metric space with named points.
///
/// Distances come either from an explicit symmetric matrix or from Euclidean
/// coordinates (evaluated on demand, exact whenever the squared distance is a
/// rational square). Immutable after construction.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  /// Validates zero diagonal, symmetry, positivity off the diagonal and the
  /// triangle inequality.
  static FiniteMetricSpace from_matrix(std::vector<std::string> ids, std::vector<std::vector<ExtReal>> dist);

  /// Rejects duplicate points. In float mode the exact coordinates are dropped.
  static FiniteMetricSpace euclidean(std::vector<std::string> ids, std::vector<Coordinates> coords,
                                     Backend backend = Backend::Rational);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::optional<std::size_t> index_of(const std::string& id) const;

  bool is_euclidean() const { return euclidean_; }
  bool has_coordinates() const { return !coords_.empty(); }
  std::size_t dimension() const { return coords_.empty() ? 0 : coords_.front().approx.size(); }
  const Coordinates& coordinates(std::size_t i) const { return coords_.at(i); }
  const std::vector<std::vector<ExtReal>>& matrix() const { return matrix_; }
  Backend backend() const { return backend_; }

  ExtReal distance(std::size_t i, std::size_t j) const;
  double distance_approx(std::size_t i, std::size_t j) const;

  /// Largest pairwise distance in `s`; 0 for sets with at most one point.
  ExtReal diameter(const PointSet& s) const;

  /// {y : d(x, y) <= r}. Requires r > 0.
  PointSet closed_ball(std::size_t x, const ExtReal& r) const;
  /// {y : d(x, y) < r}. Requires r > 0.
  PointSet open_ball(std::size_t x, const ExtReal& r) const;

  /// d(y, z) for every z.
  std::vector<ExtReal> row(std::size_t y) const;
  /// Distinct values of d(y, .) in increasing order, starting with 0.
  std::vector<ExtReal> distances_from(std::size_t y) const;
  /// Smallest positive distance from y (+inf for a single point).
  ExtReal nearest_neighbor_distance(std::size_t y) const;

  PointSet all() const { return PointSet::full(size()); }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<ExtReal>> matrix_;
  std::vector<Coordinates> coords_;
  bool euclidean_ = false;
  Backend backend_ = Backend::Rational;

  void build_index();
};

}  // namespace areaform
