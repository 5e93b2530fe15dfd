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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "areaform/caratheodory.hpp"
#include "areaform/density.hpp"
#include "areaform/hunt.hpp"
#include "areaform/instance.hpp"
#include "areaform/spaces.hpp"
#include "areaform/theorems.hpp"

namespace areaform {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the position: "line L, column C"
/// for syntax errors, a JSON pointer such as "/family/2/members" otherwise.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Instance file I/O. Exact values are written as integers, as decimal
/// numbers when those read back to the same rational, and as "p/q" strings
/// otherwise; +inf is the string "inf". Float values are plain numbers.
MetricInstance instance_from_json(const Json& doc);
Json instance_to_json(const MetricInstance& instance);
MetricInstance load_instance(std::string_view text);
MetricInstance load_instance_file(const std::filesystem::path& path);
std::string save_instance(const MetricInstance& instance);

/// Parses "a,c" style point lists against the instance ids.
PointSet parse_point_list(const FiniteMetricSpace& space, std::string_view text, const std::string& what);

Json value_json(const ExtReal& value);
Json set_json(const FiniteMetricSpace& space, const PointSet& s);

Json to_json(const HypothesisReport& report);
Json to_json(const FiniteMetricSpace& space, const AreaFormulaReport& report);
Json to_json(const FiniteMetricSpace& space, const LemmaReport& report);
Json to_json(const FiniteMetricSpace& space, const AbsContReport& report);
Json to_json(const GaugedFamily& family, const FiniteMetricSpace& space, const PsiResult& result);
Json to_json(const DensityProfile& profile);
Json to_json(const FiniteMetricSpace& space, const GaugedFamily& family, const CEtaReport& report);
Json to_json(const FiniteMetricSpace& space, const RegularityReport& report);
Json to_json(const FiniteMetricSpace& space, const BallDiameterReport& report);
Json to_json(const FiniteMetricSpace& space, const DensityComparisonReport& report);
Json to_json(const FiniteMetricSpace& space, const SemicontinuityReport& report);
Json to_json(const HuntSummary& summary);

/// Flattens a report to "key,value" rows, keys as dotted paths.
std::string json_to_csv(const Json& doc);

/// "scale,value" rows, 17 significant digits, LF line endings.
std::string profile_csv(const std::vector<std::pair<ExtReal, ExtReal>>& rows);

}  // namespace areaform
