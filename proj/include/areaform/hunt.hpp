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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "areaform/theorems.hpp"

namespace areaform {

struct HuntOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 100;
  Variant variant = Variant::GeneralI;
  std::size_t threads = 0;        // 0: hardware concurrency
  std::size_t max_points = 8;     // instances have 2..max_points points
  std::size_t exhaustive_b = 8;   // every B when n <= this, else `b_samples` random ones
  std::size_t b_samples = 256;
  bool lemmas = true;
};

enum class HuntKind { SingletonComplete, MaskedAtom, ZeroWeight, HausdorffAtomic };

std::string_view to_string(HuntKind kind);

/// Instance i of a hunt: kind and generator seed are functions of (seed, i).
std::pair<HuntKind, GeneratorSpec> hunt_spec(const HuntOptions& options, std::size_t i);
MetricInstance hunt_instance(const HuntOptions& options, std::size_t i);

struct HuntCase {
  std::size_t index = 0;
  HuntKind kind = HuntKind::SingletonComplete;
  std::uint64_t seed = 0;
  std::size_t points = 0;
  bool all_verified = false;
  bool gate_passed = false;
  Verdict verdict = Verdict::Equal;
  std::size_t b_checked = 0;
  std::optional<PointSet> failing_b;  // first B with lhs != rhs
};

struct Counterexample {
  std::size_t index = 0;
  MetricInstance instance;  // shrunk
  AreaFormulaReport report;
};

struct LemmaTally {
  std::size_t runs = 0;
  std::size_t gated = 0;       // gate failed, conclusion not checked
  std::size_t checked = 0;
  std::size_t violations = 0;  // checked runs reporting a violation
};

struct HuntSummary {
  std::size_t instances = 0;
  std::map<std::pair<bool, Verdict>, std::size_t> table;  // (all verified, verdict) -> count
  std::map<HuntKind, std::size_t> kinds;
  std::vector<HuntCase> cases;
  std::vector<Counterexample> counterexamples;
  LemmaTally minor, major;
  // Constructed violations: masked atoms and diameter gauges on atomic mu.
  std::size_t constructed = 0;
  std::size_t constructed_gate_failures = 0;  // area-formula gate and both lemma gates failed
  std::size_t constructed_silent_passes = 0;

  std::size_t count(bool all_verified, Verdict verdict) const;
};

/// Removes points of the instance while it stays a counterexample.
MetricInstance restrict_instance(const MetricInstance& instance, const PointSet& keep);

HuntSummary hunt(const HuntOptions& options);

}  // namespace areaform
