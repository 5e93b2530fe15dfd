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

#include "areaform/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace areaform {

namespace {

const ExtReal kHalf(1, 2);

}  // namespace

void FiniteMetricSpace::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) throw MetricError("duplicate point id '" + ids_[i] + "'");
  }
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(std::vector<std::string> ids,
                                                 std::vector<std::vector<ExtReal>> dist) {
  FiniteMetricSpace space;
  const std::size_t n = ids.size();
  if (dist.size() != n) {
    throw MetricError("distance matrix has " + std::to_string(dist.size()) + " rows for " + std::to_string(n) +
                      " points");
  }
  bool exact = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw MetricError("distance matrix row " + std::to_string(i) + " has " + std::to_string(dist[i].size()) +
                        " entries, expected " + std::to_string(n));
    }
    if (!dist[i][i].is_zero()) throw MetricError("d(" + ids[i] + ", " + ids[i] + ") must be 0");
    for (std::size_t j = 0; j < n; ++j) {
      exact = exact && dist[i][j].is_exact();
      if (dist[i][j].is_infinite()) throw MetricError("distances must be finite");
      if (i != j && dist[i][j].is_zero()) {
        throw MetricError("distinct points '" + ids[i] + "' and '" + ids[j] + "' at distance 0");
      }
      if (dist[i][j] != dist[j][i]) {
        throw MetricError("distance matrix not symmetric at (" + ids[i] + ", " + ids[j] + ")");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          throw MetricError("triangle inequality fails: d(" + ids[i] + ", " + ids[k] + ") > d(" + ids[i] + ", " +
                            ids[j] + ") + d(" + ids[j] + ", " + ids[k] + ")");
        }
      }
    }
  }
  space.ids_ = std::move(ids);
  space.matrix_ = std::move(dist);
  space.backend_ = exact ? Backend::Rational : Backend::Float;
  space.build_index();
  return space;
}

Coordinates Coordinates::from_exact(std::vector<Rational> exact) {
  Coordinates c;
  for (const auto& q : exact) c.approx.push_back(nearest_double(q));
  c.exact = std::move(exact);
  return c;
}

FiniteMetricSpace FiniteMetricSpace::euclidean(std::vector<std::string> ids, std::vector<Coordinates> coords,
                                               Backend backend) {
  FiniteMetricSpace space;
  if (coords.size() != ids.size()) throw MetricError("every point needs coordinates");
  const std::size_t dim = coords.empty() ? 0 : coords.front().approx.size();
  bool exact = backend == Backend::Rational;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto& c = coords[i];
    if (c.approx.size() != dim) {
      throw MetricError("point '" + ids[i] + "' has " + std::to_string(c.approx.size()) +
                        " coordinates, expected " + std::to_string(dim));
    }
    if (!c.exact.empty() && c.exact.size() != dim) throw MetricError("inconsistent exact coordinates");
    exact = exact && c.exact.size() == dim;
  }
  if (!exact) {
    for (auto& c : coords) c.exact.clear();
  }
  // Distinct points must be at positive distance.
  std::map<std::vector<double>, std::size_t> seen;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto [it, inserted] = seen.emplace(coords[i].approx, i);
    if (!inserted) {
      bool same = !exact || coords[i].exact == coords[it->second].exact;
      if (same) throw MetricError("duplicate points '" + ids[it->second] + "' and '" + ids[i] + "'");
    }
  }
  space.ids_ = std::move(ids);
  space.coords_ = std::move(coords);
  space.euclidean_ = true;
  space.backend_ = exact ? Backend::Rational : Backend::Float;
  space.build_index();
  return space;
}

std::optional<std::size_t> FiniteMetricSpace::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double FiniteMetricSpace::distance_approx(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("point index out of range");
  if (!euclidean_) return matrix_[i][j].to_double();
  const auto& a = coords_[i].approx;
  const auto& b = coords_[j].approx;
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

ExtReal FiniteMetricSpace::distance(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("point index out of range");
  if (!euclidean_) return matrix_[i][j];
  if (i == j) return backend_ == Backend::Rational ? ExtReal() : ExtReal::from_double(0.0);
  if (backend_ == Backend::Float) return ExtReal::from_double(distance_approx(i, j));
  const auto& a = coords_[i].exact;
  const auto& b = coords_[j].exact;
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Rational d = a[k] - b[k];
    s += d * d;
  }
  return pow(ExtReal(s), kHalf);
}

ExtReal FiniteMetricSpace::diameter(const PointSet& s) const {
  if (s.universe() != size()) throw std::out_of_range("point set universe does not match the space");
  auto members = s.members();
  if (euclidean_ && backend_ == Backend::Float) {
    double best = 0.0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) best = std::max(best, distance_approx(members[a], members[b]));
    }
    return ExtReal::from_double(best);
  }
  ExtReal best = backend_ == Backend::Rational ? ExtReal() : ExtReal::from_double(0.0);
  if (euclidean_) {
    // Exact distances only for pairs whose double distance is near the top.
    double top = 0.0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) top = std::max(top, distance_approx(members[a], members[b]));
    }
    const double screen = top * (1 - 1e-9);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (distance_approx(members[a], members[b]) < screen) continue;
        ExtReal d = distance(members[a], members[b]);
        if (d > best) best = std::move(d);
      }
    }
    return best;
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      ExtReal d = distance(members[a], members[b]);
      if (d > best) best = std::move(d);
    }
  }
  return best;
}

PointSet FiniteMetricSpace::closed_ball(std::size_t x, const ExtReal& r) const {
  if (r.is_zero()) throw std::invalid_argument("ball radius must be positive");
  PointSet ball(size());
  for (std::size_t y = 0; y < size(); ++y) {
    if (distance(x, y) <= r) ball.insert(y);
  }
  return ball;
}

PointSet FiniteMetricSpace::open_ball(std::size_t x, const ExtReal& r) const {
  if (r.is_zero()) throw std::invalid_argument("ball radius must be positive");
  PointSet ball(size());
  for (std::size_t y = 0; y < size(); ++y) {
    if (distance(x, y) < r) ball.insert(y);
  }
  return ball;
}

std::vector<ExtReal> FiniteMetricSpace::row(std::size_t y) const {
  std::vector<ExtReal> out;
  out.reserve(size());
  for (std::size_t z = 0; z < size(); ++z) out.push_back(distance(y, z));
  return out;
}

std::vector<ExtReal> FiniteMetricSpace::distances_from(std::size_t y) const {
  std::vector<ExtReal> out = row(y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtReal FiniteMetricSpace::nearest_neighbor_distance(std::size_t y) const {
  ExtReal best = ExtReal::infinity();
  for (std::size_t z = 0; z < size(); ++z) {
    if (z == y) continue;
    ExtReal d = distance(y, z);
    if (d < best) best = std::move(d);
  }
  return best;
}

}  // namespace areaform
