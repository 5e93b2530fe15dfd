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

#include "areaform/instance.hpp"

#include <stdexcept>

namespace areaform {

std::string_view to_string(FinenessSemantics semantics) {
  return semantics == FinenessSemantics::Exact ? "exact" : "resolution";
}

void MetricInstance::validate() const {
  const std::size_t n = space.size();
  if (measure.universe() != n) {
    throw std::invalid_argument("measure covers " + std::to_string(measure.universe()) + " points, space has " +
                                std::to_string(n));
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    if (m.set.universe() != n) throw std::invalid_argument("family member " + std::to_string(i) + " has the wrong universe");
    if (m.set.empty()) throw std::invalid_argument("family member " + std::to_string(i) + " is empty");
  }
  if (tau <= ExtReal(1) || tau.is_infinite()) throw std::invalid_argument("tau must be a finite number > 1");
  if (resolution && (resolution->is_zero() || resolution->is_infinite())) {
    throw std::invalid_argument("resolution must be finite and positive");
  }
}

MetricInstance with_diameter_gauge(const MetricInstance& instance, const ExtReal& alpha, const ExtReal& c_alpha,
                                   GaugeKind kind) {
  MetricInstance out = instance;
  switch (kind) {
    case GaugeKind::Hausdorff:
      out.gauge = Gauge::hausdorff(alpha, c_alpha);
      break;
    case GaugeKind::Spherical:
      out.gauge = Gauge::spherical(alpha, c_alpha);
      if (out.family.source != FamilySource::ClosedBalls) out.family = closed_ball_family(out.space, out.family.max_radius, out.family.positive_diameter);
      break;
    case GaugeKind::OpenSpherical:
      out.gauge = Gauge::open_spherical(alpha, c_alpha);
      if (out.family.source != FamilySource::OpenBalls) out.family = open_ball_family(out.space, out.family.max_radius, out.family.positive_diameter);
      break;
    case GaugeKind::Explicit:
      throw std::invalid_argument("explicit gauges have no diameter exponent");
  }
  for (auto& m : out.family.members) m.zeta.reset();
  return out;
}

}  // namespace areaform
