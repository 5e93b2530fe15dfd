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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace areaform {

/// A subset of the points {0, ..., universe - 1} of a finite metric space.
/// Iteration visits members in increasing index order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members);
  PointSet(std::size_t universe, std::span<const std::size_t> members);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Throws std::out_of_range for indices outside the universe.
  bool contains(std::size_t index) const;
  void insert(std::size_t index);
  void erase(std::size_t index);

  std::vector<std::size_t> members() const;
  std::size_t first() const { return bits_.find_first(); }
  std::size_t next(std::size_t index) const { return bits_.find_next(index); }
  static constexpr std::size_t npos = boost::dynamic_bitset<>::npos;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != npos; i = bits_.find_next(i)) fn(i);
  }

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const PointSet& other) const { return bits_.intersects(other.bits_); }

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.bits_ < b.bits_; }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  void check_universe(const PointSet& other) const;

  boost::dynamic_bitset<> bits_;
};

/// Subset of the universe selected by the low bits of `mask` (universe <= 64).
PointSet subset_from_mask(std::size_t universe, std::uint64_t mask);

}  // namespace areaform
