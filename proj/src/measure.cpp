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

#include "areaform/measure.hpp"

#include <algorithm>
#include <string>

namespace areaform {

AtomicMeasure AtomicMeasure::atomic(std::vector<ExtReal> masses) {
  AtomicMeasure mu;
  mu.mode_ = Mode::Atomic;
  mu.universe_ = masses.size();
  mu.masses_ = std::move(masses);
  return mu;
}

AtomicMeasure AtomicMeasure::table(std::size_t universe, std::map<PointSet, ExtReal> values) {
  if (universe > 10) throw MeasureError("table-oracle measures are limited to 10 points");
  const std::uint64_t count = std::uint64_t{1} << universe;
  std::vector<ExtReal> dense(count);
  std::vector<bool> listed(count, false);
  listed[0] = true;
  for (const auto& [set, value] : values) {
    if (set.universe() != universe) throw MeasureError("table entry over a different universe");
    std::uint64_t mask = 0;
    set.for_each([&](std::size_t i) { mask |= std::uint64_t{1} << i; });
    if (mask == 0) {
      if (!value.is_zero()) throw MeasureError("table assigns a nonzero value to the empty set");
      continue;
    }
    dense[mask] = value;
    listed[mask] = true;
  }
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    if (!listed[mask]) {
      throw MeasureError("table-oracle measure must list every nonempty subset; missing subset mask " +
                         std::to_string(mask));
    }
  }
  for (std::uint64_t a = 1; a < count; ++a) {
    for (std::size_t i = 0; i < universe; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((a & bit) && dense[a ^ bit] > dense[a]) {
        throw MeasureError("table-oracle measure is not monotone at subset mask " + std::to_string(a));
      }
    }
    for (std::uint64_t b = a; b < count; ++b) {
      if (dense[a | b] > dense[a] + dense[b]) {
        throw MeasureError("table-oracle measure is not subadditive at subset masks " + std::to_string(a) + ", " +
                           std::to_string(b));
      }
    }
  }
  AtomicMeasure mu;
  mu.mode_ = Mode::TableOracle;
  mu.universe_ = universe;
  mu.table_ = std::move(values);
  for (std::size_t i = 0; i < universe; ++i) {
    mu.masses_.push_back(dense[std::uint64_t{1} << i]);
  }
  return mu;
}

ExtReal AtomicMeasure::mass(std::size_t i) const { return masses_.at(i); }

ExtReal AtomicMeasure::operator()(const PointSet& s) const {
  if (s.universe() != universe_) throw std::out_of_range("point set universe does not match the measure");
  if (s.empty()) return {};
  if (mode_ == Mode::TableOracle) return table_.at(s);
  ExtReal total;
  s.for_each([&](std::size_t i) { total += masses_[i]; });
  return total;
}

bool AtomicMeasure::is_exact() const {
  auto exact = [](const ExtReal& v) { return v.is_exact(); };
  return std::all_of(masses_.begin(), masses_.end(), exact) &&
         std::all_of(table_.begin(), table_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

AtomicMeasure AtomicMeasure::with_backend(Backend backend) const {
  AtomicMeasure out = *this;
  for (auto& m : out.masses_) m = m.with_backend(backend);
  for (auto& [set, value] : out.table_) value = value.with_backend(backend);
  return out;
}

}  // namespace areaform
