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
#include <stdexcept>
#include <vector>

#include "areaform/ext_real.hpp"
#include "areaform/point_set.hpp"

namespace areaform {

class MeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A measure over a finite point set.
///
/// Atomic mode sums per-point masses. Table-oracle mode looks values up in a
/// complete table over all nonempty subsets (at most 10 points), validated at
/// construction to be monotone and subadditive.
class AtomicMeasure {
 public:
  enum class Mode { Atomic, TableOracle };

  AtomicMeasure() = default;
  static AtomicMeasure atomic(std::vector<ExtReal> masses);
  static AtomicMeasure table(std::size_t universe, std::map<PointSet, ExtReal> values);

  Mode mode() const { return mode_; }
  bool is_atomic() const { return mode_ == Mode::Atomic; }
  std::size_t universe() const { return universe_; }

  /// mu({i}).
  ExtReal mass(std::size_t i) const;
  const std::vector<ExtReal>& masses() const { return masses_; }
  const std::map<PointSet, ExtReal>& table_values() const { return table_; }

  ExtReal operator()(const PointSet& s) const;

  bool is_exact() const;
  AtomicMeasure with_backend(Backend backend) const;

 private:
  Mode mode_ = Mode::Atomic;
  std::size_t universe_ = 0;
  std::vector<ExtReal> masses_;
  std::map<PointSet, ExtReal> table_;
};

}  // namespace areaform
