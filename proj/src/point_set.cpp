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

#include "areaform/point_set.hpp"

#include <stdexcept>
#include <string>

namespace areaform {

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe) {
  for (auto i : members) insert(i);
}

PointSet::PointSet(std::size_t universe, std::span<const std::size_t> members) : bits_(universe) {
  for (auto i : members) insert(i);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  s.bits_.set();
  return s;
}

bool PointSet::contains(std::size_t index) const {
  if (index >= bits_.size()) {
    throw std::out_of_range("point index " + std::to_string(index) + " out of range (" +
                            std::to_string(bits_.size()) + " points)");
  }
  return bits_.test(index);
}

void PointSet::insert(std::size_t index) {
  if (index >= bits_.size()) {
    throw std::out_of_range("point index " + std::to_string(index) + " out of range (" +
                            std::to_string(bits_.size()) + " points)");
  }
  bits_.set(index);
}

void PointSet::erase(std::size_t index) {
  if (index < bits_.size()) bits_.reset(index);
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

void PointSet::check_universe(const PointSet& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw std::invalid_argument("point sets over different universes (" + std::to_string(bits_.size()) +
                                " vs " + std::to_string(other.bits_.size()) + ")");
  }
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_universe(other);
  bits_ |= other.bits_;
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_universe(other);
  bits_ &= other.bits_;
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_universe(other);
  bits_ -= other.bits_;
  return *this;
}

PointSet subset_from_mask(std::size_t universe, std::uint64_t mask) {
  PointSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

}  // namespace areaform
