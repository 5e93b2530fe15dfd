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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "areaform/ext_real.hpp"
#include "areaform/metric_space.hpp"
#include "areaform/point_set.hpp"

namespace areaform {

/// Raised when a gauge is evaluated on a set outside its domain.
class OutsideDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GaugeKind { Explicit, Hausdorff, Spherical, OpenSpherical };

std::string_view to_string(GaugeKind kind);

/// A set function zeta: S -> [0, +inf].
///
/// The diameter kinds evaluate c_alpha * diam(S)^alpha; the spherical kinds
/// additionally restrict the domain to closed (resp. open) balls. Explicit
/// gauges are tables and are undefined on unlisted sets.
class Gauge {
 public:
  static Gauge explicit_table(std::map<PointSet, ExtReal> table);
  static Gauge hausdorff(ExtReal alpha, ExtReal c_alpha);
  static Gauge spherical(ExtReal alpha, ExtReal c_alpha);
  static Gauge open_spherical(ExtReal alpha, ExtReal c_alpha);

  GaugeKind kind() const { return kind_; }
  bool is_diameter_power() const { return kind_ != GaugeKind::Explicit; }
  const ExtReal& alpha() const { return alpha_; }
  const ExtReal& c_alpha() const { return c_alpha_; }
  const std::map<PointSet, ExtReal>& table() const { return table_; }

  /// c_alpha * diam^alpha.
  ExtReal of_diameter(const ExtReal& diam) const;

  /// Throws OutsideDomainError when `s` is not in the gauge's domain.
  ExtReal operator()(const PointSet& s, const FiniteMetricSpace& space) const;

 private:
  Gauge(GaugeKind kind, ExtReal alpha, ExtReal c_alpha);

  GaugeKind kind_ = GaugeKind::Explicit;
  ExtReal alpha_;
  ExtReal c_alpha_;
  std::map<PointSet, ExtReal> table_;
};

inline ExtReal gauge_eval(const Gauge& gauge, const PointSet& s, const FiniteMetricSpace& space) {
  return gauge(s, space);
}

/// True when s = B(y, r) for some center y and radius r > 0. On a finite space
/// the closed and the open balls form the same family of sets.
bool is_ball(const PointSet& s, const FiniteMetricSpace& space);

struct BallTag {
  std::size_t center = 0;
  ExtReal radius;
  bool open = false;
};

/// One candidate covering set. `zeta` is its explicit gauge value; `scale`,
/// when present, is the diameter of the continuum set the member stands for
/// and replaces the point-set diameter inside diameter-power gauges.
struct FamilyMember {
  PointSet set;
  std::optional<ExtReal> zeta;
  std::optional<ExtReal> scale;
  std::optional<BallTag> ball;
};

enum class FamilySource { Listed, ClosedBalls, OpenBalls, AllSubsets };

std::string_view to_string(FamilySource source);

struct Family {
  FamilySource source = FamilySource::Listed;
  std::optional<ExtReal> max_radius;
  bool positive_diameter = false;  // generated families: balls of positive diameter only
  std::vector<FamilyMember> members;
};

/// All closed balls B(y, r) with r a realized distance from y (r <= max_radius
/// when given), deduplicated as sets. Singletons use half the nearest-neighbor
/// distance as radius; `positive_diameter` leaves them out.
Family closed_ball_family(const FiniteMetricSpace& space, std::optional<ExtReal> max_radius = std::nullopt,
                          bool positive_diameter = false);
/// All open balls {z : d(y, z) < r}, built with strict inequalities at radii
/// just past each realized distance.
Family open_ball_family(const FiniteMetricSpace& space, std::optional<ExtReal> max_radius = std::nullopt,
                        bool positive_diameter = false);
/// Every nonempty subset; limited to 20 points.
Family all_subsets_family(const FiniteMetricSpace& space);

struct GaugedMember {
  PointSet set;
  ExtReal zeta;
  ExtReal diameter;
  std::optional<BallTag> ball;
};

/// A family with its gauge values and diameters evaluated once. The empty set
/// is never a member.
class GaugedFamily {
 public:
  GaugedFamily() = default;
  GaugedFamily(std::size_t universe, std::vector<GaugedMember> members);

  static GaugedFamily evaluate(const FiniteMetricSpace& space, const Family& family, const Gauge& gauge);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const GaugedMember& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<GaugedMember>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members indexed by `indices`, in that order.
  GaugedFamily subfamily(const std::vector<std::size_t>& indices) const;
  /// True when every value involved is exact.
  bool is_exact() const;

 private:
  std::size_t universe_ = 0;
  std::vector<GaugedMember> members_;
};

}  // namespace areaform
