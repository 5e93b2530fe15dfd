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

#include "areaform/gauge.hpp"

#include <algorithm>

namespace areaform {

std::string_view to_string(GaugeKind kind) {
  switch (kind) {
    case GaugeKind::Explicit: return "explicit";
    case GaugeKind::Hausdorff: return "hausdorff";
    case GaugeKind::Spherical: return "spherical";
    case GaugeKind::OpenSpherical: return "open-spherical";
  }
  return "?";
}

std::string_view to_string(FamilySource source) {
  switch (source) {
    case FamilySource::Listed: return "listed";
    case FamilySource::ClosedBalls: return "closed-balls";
    case FamilySource::OpenBalls: return "open-balls";
    case FamilySource::AllSubsets: return "all-subsets";
  }
  return "?";
}

Gauge::Gauge(GaugeKind kind, ExtReal alpha, ExtReal c_alpha)
    : kind_(kind), alpha_(std::move(alpha)), c_alpha_(std::move(c_alpha)) {
  if (alpha_.is_zero() || alpha_.is_infinite()) {
    throw std::invalid_argument("alpha must be finite and positive, got " + alpha_.to_string());
  }
  if (c_alpha_.is_zero() || c_alpha_.is_infinite()) {
    throw std::invalid_argument("c_alpha must be finite and positive, got " + c_alpha_.to_string());
  }
}

Gauge Gauge::explicit_table(std::map<PointSet, ExtReal> table) {
  Gauge g(GaugeKind::Hausdorff, ExtReal(1), ExtReal(1));
  g.kind_ = GaugeKind::Explicit;
  g.table_ = std::move(table);
  return g;
}

Gauge Gauge::hausdorff(ExtReal alpha, ExtReal c_alpha) {
  return Gauge(GaugeKind::Hausdorff, std::move(alpha), std::move(c_alpha));
}

Gauge Gauge::spherical(ExtReal alpha, ExtReal c_alpha) {
  return Gauge(GaugeKind::Spherical, std::move(alpha), std::move(c_alpha));
}

Gauge Gauge::open_spherical(ExtReal alpha, ExtReal c_alpha) {
  return Gauge(GaugeKind::OpenSpherical, std::move(alpha), std::move(c_alpha));
}

ExtReal Gauge::of_diameter(const ExtReal& diam) const { return c_alpha_ * pow(diam, alpha_); }

ExtReal Gauge::operator()(const PointSet& s, const FiniteMetricSpace& space) const {
  if (s.universe() != space.size()) throw std::out_of_range("point set universe does not match the space");
  switch (kind_) {
    case GaugeKind::Explicit: {
      auto it = table_.find(s);
      if (it == table_.end()) throw OutsideDomainError("set is not listed in the explicit gauge table");
      return it->second;
    }
    case GaugeKind::Spherical:
    case GaugeKind::OpenSpherical:
      if (!is_ball(s, space)) {
        throw OutsideDomainError(std::string("set is not ") +
                                 (kind_ == GaugeKind::Spherical ? "a closed ball" : "an open ball"));
      }
      [[fallthrough]];
    case GaugeKind::Hausdorff:
      if (s.empty()) throw OutsideDomainError("the empty set is outside every gauge domain");
      return of_diameter(space.diameter(s));
  }
  return {};
}

bool is_ball(const PointSet& s, const FiniteMetricSpace& space) {
  if (s.empty()) return false;
  auto members = s.members();
  for (std::size_t y : members) {
    ExtReal ecc;
    for (std::size_t z : members) ecc = max(ecc, space.distance(y, z));
    bool closed_under_radius = true;
    for (std::size_t z = 0; z < space.size() && closed_under_radius; ++z) {
      if (!s.contains(z) && space.distance(y, z) <= ecc) closed_under_radius = false;
    }
    if (closed_under_radius) return true;
  }
  return false;
}

namespace {

void add_unique(Family& family, std::map<PointSet, std::size_t>& seen, PointSet set, BallTag tag) {
  if (set.empty()) return;
  if (seen.emplace(set, family.members.size()).second) {
    family.members.push_back(FamilyMember{std::move(set), std::nullopt, std::nullopt, std::move(tag)});
  }
}

}  // namespace

namespace {

std::vector<ExtReal> sorted_unique(std::vector<ExtReal> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// {z : row[z] <= r} or {z : row[z] < r}.
PointSet ball_from_row(const std::vector<ExtReal>& row, const ExtReal& r, bool open) {
  PointSet ball(row.size());
  for (std::size_t z = 0; z < row.size(); ++z) {
    if (open ? row[z] < r : row[z] <= r) ball.insert(z);
  }
  return ball;
}

// Distances from y. With a radius cap on a Euclidean space the far points are
// screened by their double distance and recorded as +inf, which no ball
// radius reaches.
std::vector<ExtReal> capped_row(const FiniteMetricSpace& space, std::size_t y, const std::optional<ExtReal>& cap) {
  if (!cap || !cap->is_finite() || !space.is_euclidean()) return space.row(y);
  const double screen = cap->to_double() * (1 + 1e-9) + 1e-300;
  std::vector<ExtReal> out;
  out.reserve(space.size());
  for (std::size_t z = 0; z < space.size(); ++z) {
    out.push_back(space.distance_approx(y, z) > screen ? ExtReal::infinity() : space.distance(y, z));
  }
  return out;
}

}  // namespace

Family closed_ball_family(const FiniteMetricSpace& space, std::optional<ExtReal> max_radius,
                          bool positive_diameter) {
  Family family;
  family.source = FamilySource::ClosedBalls;
  family.max_radius = max_radius;
  family.positive_diameter = positive_diameter;
  std::map<PointSet, std::size_t> seen;
  const std::size_t n = space.size();
  for (std::size_t y = 0; y < n; ++y) {
    auto row = capped_row(space, y, max_radius);
    auto radii = sorted_unique(row);
    if (!positive_diameter) {
      ExtReal singleton_radius = radii.size() > 1 ? radii[1] * ExtReal(1, 2) : ExtReal(1);
      add_unique(family, seen, PointSet(n, {y}), BallTag{y, singleton_radius, false});
    }
    for (std::size_t k = 1; k < radii.size(); ++k) {
      if (max_radius && radii[k] > *max_radius) break;
      add_unique(family, seen, ball_from_row(row, radii[k], false), BallTag{y, radii[k], false});
    }
  }
  return family;
}

Family open_ball_family(const FiniteMetricSpace& space, std::optional<ExtReal> max_radius, bool positive_diameter) {
  Family family;
  family.source = FamilySource::OpenBalls;
  family.max_radius = max_radius;
  family.positive_diameter = positive_diameter;
  std::map<PointSet, std::size_t> seen;
  const std::size_t n = space.size();
  for (std::size_t y = 0; y < n; ++y) {
    auto row = capped_row(space, y, max_radius);
    auto dists = sorted_unique(row);
    std::vector<ExtReal> radii(dists.begin() + 1, dists.end());
    radii.push_back(dists.size() > 1 ? dists.back() * ExtReal(2) : ExtReal(1));
    for (const auto& r : radii) {
      if (max_radius && r > *max_radius) break;
      PointSet ball = ball_from_row(row, r, true);
      if (positive_diameter && ball.size() < 2) continue;
      add_unique(family, seen, std::move(ball), BallTag{y, r, true});
    }
  }
  return family;
}

Family all_subsets_family(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n > 16) throw std::invalid_argument("all-subsets family limited to 16 points, got " + std::to_string(n));
  Family family;
  family.source = FamilySource::AllSubsets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    family.members.push_back(FamilyMember{subset_from_mask(n, mask), std::nullopt, std::nullopt, std::nullopt});
  }
  return family;
}

GaugedFamily::GaugedFamily(std::size_t universe, std::vector<GaugedMember> members)
    : universe_(universe), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.set.universe() != universe_) throw std::invalid_argument("family member over a different universe");
    if (m.set.empty()) throw std::invalid_argument("the empty set is never a family member");
  }
}

GaugedFamily GaugedFamily::evaluate(const FiniteMetricSpace& space, const Family& family, const Gauge& gauge) {
  std::vector<GaugedMember> members;
  members.reserve(family.members.size());
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    ExtReal diam = space.diameter(m.set);
    ExtReal zeta;
    switch (gauge.kind()) {
      case GaugeKind::Explicit:
        if (m.zeta) {
          zeta = *m.zeta;
        } else {
          try {
            zeta = gauge(m.set, space);
          } catch (const OutsideDomainError&) {
            throw OutsideDomainError("family member " + std::to_string(i) + " has no explicit gauge value");
          }
        }
        break;
      case GaugeKind::Spherical:
      case GaugeKind::OpenSpherical: {
        bool tagged = m.ball && m.ball->open == (gauge.kind() == GaugeKind::OpenSpherical);
        if (!tagged && !is_ball(m.set, space)) {
          throw OutsideDomainError("family member " + std::to_string(i) + " is not a ball");
        }
        zeta = gauge.of_diameter(m.scale ? *m.scale : diam);
        break;
      }
      case GaugeKind::Hausdorff:
        zeta = gauge.of_diameter(m.scale ? *m.scale : diam);
        break;
    }
    members.push_back(GaugedMember{m.set, std::move(zeta), std::move(diam), m.ball});
  }
  return GaugedFamily(space.size(), std::move(members));
}

GaugedFamily GaugedFamily::subfamily(const std::vector<std::size_t>& indices) const {
  std::vector<GaugedMember> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(members_.at(i));
  return GaugedFamily(universe_, std::move(out));
}

bool GaugedFamily::is_exact() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](const GaugedMember& m) { return m.zeta.is_exact() && m.diameter.is_exact(); });
}

}  // namespace areaform
