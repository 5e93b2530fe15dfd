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
#include <string>

#include "areaform/ext_real.hpp"
#include "areaform/gauge.hpp"
#include "areaform/measure.hpp"
#include "areaform/metric_space.hpp"

namespace areaform {

/// How fineness ("sets of arbitrarily small diameter") is read on a finite
/// instance: a set of diameter 0 (exact), or of diameter <= h (resolution).
enum class FinenessSemantics { Exact, Resolution };

std::string_view to_string(FinenessSemantics semantics);

/// A finite metric space with a covering family, a gauge and a measure.
struct MetricInstance {
  FiniteMetricSpace space;
  Family family;
  Gauge gauge = Gauge::hausdorff(ExtReal(1), ExtReal(1));
  AtomicMeasure measure;
  ExtReal tau = ExtReal(2);
  bool tau_is_default = true;
  std::optional<ExtReal> resolution;
  Backend backend = Backend::Rational;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return space.size(); }
  FinenessSemantics semantics() const {
    return resolution ? FinenessSemantics::Resolution : FinenessSemantics::Exact;
  }
  /// Largest diameter that counts as "arbitrarily small": 0 on exact
  /// instances, the grid slack 4h at resolution h (no ball of positive
  /// diameter on an h-grid is smaller than 2h).
  ExtReal fineness_floor() const { return resolution ? *resolution * ExtReal(4) : ExtReal(); }

  GaugedFamily gauged_family() const { return GaugedFamily::evaluate(space, family, gauge); }

  /// Throws when the parts disagree on the number of points or tau <= 1.
  void validate() const;
};

/// The instance with the gauge replaced by c_alpha * diam^alpha, keeping
/// per-member scales. Spherical kinds switch to the generated ball family.
MetricInstance with_diameter_gauge(const MetricInstance& instance, const ExtReal& alpha, const ExtReal& c_alpha,
                                   GaugeKind kind = GaugeKind::Hausdorff);

}  // namespace areaform
