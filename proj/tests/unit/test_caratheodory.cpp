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

#include "doctest.h"
#include "support.hpp"

using namespace areaform;
using namespace testing_support;

namespace {

// X = {a, b} at distance 1; {a}:2, {b}:3, {a,b}:4.
GaugedFamily two_point_family() {
  auto x = discrete(2);
  Family f;
  f.members = {{singleton(2, 0), ExtReal(2), {}, {}},
               {singleton(2, 1), ExtReal(3), {}, {}},
               {x.all(), ExtReal(4), {}, {}}};
  return GaugedFamily::evaluate(x, f, Gauge::explicit_table({}));
}

// Random listed family over random points on a line with explicit rational
// weights; sometimes +inf or 0 weights.
GaugedFamily random_family(std::mt19937_64& rng, std::size_t n, std::size_t members) {
  std::vector<Rational> xs;
  std::set<long> used;
  while (xs.size() < n) {
    long v = static_cast<long>(rng() % 97);
    if (used.insert(v).second) xs.push_back(Rational(v, 4));
  }
  auto x = line(xs);
  Family f;
  for (std::size_t k = 0; k < members; ++k) {
    PointSet s = subset_from_mask(n, 1 + rng() % ((std::uint64_t{1} << n) - 1));
    ExtReal w = random_rational(rng, 1, 40, 1 + static_cast<int>(rng() % 6));
    if (rng() % 17 == 0) w = ExtReal::infinity();
    if (rng() % 23 == 0) w = ExtReal();
    f.members.push_back({s, w, {}, {}});
  }
  return GaugedFamily::evaluate(x, f, Gauge::explicit_table({}));
}

}  // namespace

TEST_CASE("phi on the two-point instance") {
  auto f = two_point_family();
  auto all = PointSet::full(2);
  auto s1 = phi(f, ExtReal(1), all);
  CHECK(s1.value == ExtReal(4));
  CHECK(s1.certificate == Certificate::Exact);
  CHECK(s1.cover == std::vector<std::size_t>{2});
  CHECK(phi(f, ExtReal(1, 2), all).value == ExtReal(5));
  auto empty = phi(f, ExtReal(1), PointSet(2));
  CHECK(empty.value == ExtReal());
  CHECK(empty.cover.empty());
  CHECK_THROWS(phi(f, ExtReal(), all));
}

TEST_CASE("psi on the two-point instance") {
  auto f = two_point_family();
  CHECK(psi(f, PointSet::full(2)) == ExtReal(5));
  CHECK(psi(f, PointSet(2)) == ExtReal());
  auto only_a = f.subfamily({0});
  CHECK(psi(only_a, PointSet::full(2)).is_infinite());
  auto p = phi(only_a, ExtReal(1), PointSet::full(2));
  CHECK(p.value.is_infinite());
  CHECK(p.cover.empty());
}

TEST_CASE("delta probes sit strictly between member diameters") {
  auto x = line({Rational(0), Rational(1), Rational(3)});
  auto f = GaugedFamily::evaluate(x, all_subsets_family(x), Gauge::hausdorff(ExtReal(1), ExtReal(1)));
  auto probes = delta_probes(f);
  std::vector<ExtReal> expected{ExtReal(1, 2), ExtReal(3, 2), ExtReal(5, 2), ExtReal(6)};
  CHECK(probes == expected);
}

TEST_CASE("hausdorff measure vanishes on finite sets") {
  auto x = line({Rational(0), Rational(5, 2)});
  auto all = all_subsets_family(x);
  CHECK(hausdorff_measure(x, ExtReal(1), ExtReal(1), all, x.all()) == ExtReal());
  CHECK(hausdorff_measure(x, ExtReal(1, 2), ExtReal(1), all, singleton(2, 0)) == ExtReal());
  CHECK(spherical_measure(x, ExtReal(1), ExtReal(1), x.all()) == ExtReal());
  // At delta above d(a, b) the single pair is the cheapest cover.
  auto g = GaugedFamily::evaluate(x, all, Gauge::hausdorff(ExtReal(1), ExtReal(1)));
  CHECK(phi(g, ExtReal(3), x.all()).value == ExtReal());
}

TEST_CASE("branch and bound matches exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    auto f = random_family(rng, n, 1 + rng() % 12);
    PointSet target = subset_from_mask(n, rng() % (std::uint64_t{1} << n));
    for (const auto& delta : delta_probes(f)) {
      auto s = phi(f, delta, target);
      CHECK(s.value == exhaustive_phi(f, delta, target));
      if (s.value.is_finite()) {
        PointSet covered(n);
        ExtReal sum;
        for (auto i : s.cover) {
          CHECK(f[i].diameter <= delta);
          covered |= f[i].set;
          sum += f[i].zeta;
        }
        CHECK(target.is_subset_of(covered));
        CHECK(sum == s.value);
      }
      CHECK(greedy_cover(f, delta, target).value >= s.value);
    }
    CHECK(psi(f, target) == exhaustive_psi(f, target));
  }
}

TEST_CASE("phi is monotone in delta and in the target") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    auto f = random_family(rng, n, 4 + rng() % 8);
    std::uint64_t big = rng() % (std::uint64_t{1} << n);
    PointSet a = subset_from_mask(n, big & rng()), b = subset_from_mask(n, big);
    auto probes = delta_probes(f);
    for (std::size_t k = 0; k + 1 < probes.size(); ++k) {
      CHECK(phi(f, probes[k], b).value >= phi(f, probes[k + 1], b).value);
      CHECK(phi(f, probes[k], a).value <= phi(f, probes[k], b).value);
    }
  }
}

TEST_CASE("node limit downgrades the certificate") {
  std::mt19937_64 rng(5);
  auto f = random_family(rng, 8, 12);
  SolverOptions options;
  options.node_limit = 1;
  auto s = phi(f, ExtReal(1000), PointSet::full(8), options);
  if (s.nodes > 1) CHECK(s.certificate == Certificate::GreedyUpperBound);
  CHECK(s.value >= phi(f, ExtReal(1000), PointSet::full(8)).value);
}

TEST_CASE("float backend solves the same covers") {
  auto x = discrete(3);
  Family f;
  f.members = {{singleton(3, 0), ExtReal::from_double(0.1), {}, {}},
               {singleton(3, 1), ExtReal::from_double(0.2), {}, {}},
               {singleton(3, 2), ExtReal::from_double(0.3), {}, {}},
               {x.all(), ExtReal::from_double(0.5), {}, {}}};
  auto g = GaugedFamily::evaluate(x, f, Gauge::explicit_table({}));
  auto s = phi(g, ExtReal(1), x.all());
  CHECK(!s.value.is_exact());
  CHECK(s.value.to_double() == doctest::Approx(0.5));
  CHECK(psi(g, x.all()).to_double() == doctest::Approx(0.6));
}
