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

#include "areaform/io.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace areaform;
using namespace testing_support;

namespace {

std::string error_of(std::string_view text) {
  try {
    load_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

void check_same(const MetricInstance& a, const MetricInstance& b) {
  REQUIRE(a.size() == b.size());
  CHECK(a.space.ids() == b.space.ids());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(a.space.distance(i, j) == b.space.distance(i, j));
      CHECK(a.space.distance(i, j).is_exact() == b.space.distance(i, j).is_exact());
    }
  }
  auto fa = a.gauged_family(), fb = b.gauged_family();
  REQUIRE(fa.size() == fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    CHECK(fa[i].set == fb[i].set);
    CHECK(fa[i].zeta == fb[i].zeta);
    CHECK(fa[i].zeta.is_exact() == fb[i].zeta.is_exact());
  }
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << std::min<std::size_t>(a.size(), 8)); ++m) {
    PointSet s = subset_from_mask(a.size(), m);
    CHECK(a.measure(s) == b.measure(s));
  }
  CHECK(a.tau == b.tau);
  CHECK(a.resolution == b.resolution);
  CHECK(a.backend == b.backend);
  CHECK(a.metadata == b.metadata);
}

}  // namespace

TEST_CASE("instance round trip") {
  std::vector<GeneratorSpec> specs;
  for (int d = 0; d <= 4; ++d) {
    GeneratorSpec s;
    s.kind = GeneratorKind::Cantor;
    s.depth = d;
    specs.push_back(s);
  }
  GeneratorSpec s;
  s.kind = GeneratorKind::Sierpinski;
  s.depth = 2;
  specs.push_back(s);
  for (auto backend : {Backend::Rational, Backend::Float}) {
    GeneratorSpec e;
    e.kind = GeneratorKind::EpsilonNet;
    e.dimension = 2;
    e.h = ExtReal(1, 3);
    e.backend = backend;
    specs.push_back(e);
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    GeneratorSpec r;
    r.kind = seed % 2 ? GeneratorKind::RandomMetric : GeneratorKind::SingletonComplete;
    r.seed = seed;
    r.n = 5;
    r.masked_atom = seed == 2;
    specs.push_back(r);
  }
  for (const auto& spec : specs) {
    auto inst = generate(spec);
    std::string text = save_instance(inst);
    auto back = load_instance(text);
    check_same(inst, back);
    CHECK(save_instance(back) == text);
  }
}

TEST_CASE("hand-written instance with table measure, explicit table and negative coordinates") {
  const char* text = R"({
    "points": [{"id": "a", "coords": [-0.5]}, {"id": "b", "coords": ["1/3"]}],
    "metric": "euclidean",
    "family": [{"members": ["a"]}, {"members": ["b"], "zeta": "inf"}, {"members": ["a", "b"], "zeta": 0.1}],
    "gauge": {"type": "explicit", "table": [{"members": ["a"], "value": 2}]},
    "measure": {"type": "table", "values": [{"members": ["a"], "value": 1}, {"members": ["b"], "value": 2},
                                            {"members": ["a", "b"], "value": 3}]},
    "tau": 3
  })";
  auto inst = load_instance(text);
  CHECK(inst.space.distance(0, 1) == ExtReal(5, 6));
  auto f = inst.gauged_family();
  CHECK(f[0].zeta == ExtReal(2));
  CHECK(f[1].zeta.is_infinite());
  CHECK(f[2].zeta == ExtReal(1, 10));
  CHECK(inst.measure(inst.space.all()) == ExtReal(3));
  CHECK(inst.tau == ExtReal(3));
  CHECK_FALSE(inst.tau_is_default);
  auto back = load_instance(save_instance(inst));
  check_same(inst, back);
  CHECK(save_instance(back) == save_instance(inst));
}

TEST_CASE("input errors carry positions") {
  CHECK(error_of("{\n  \"points\": [\"a\",\n}").rfind("line 3, column 1", 0) == 0);
  CHECK(error_of(R"({"points": ["a", "a"], "metric": {"matrix": [[0,1],[1,0]]}})").rfind("/points/1:", 0) == 0);
  const std::string base = R"({"points": ["a", "b"], "metric": {"matrix": [[0, 1], [1, 0]]}, )";
  CHECK(error_of(base + R"("family": [{"members": ["a", "z"]}], "measure": {"type": "atomic", "mass": {}}})")
            .rfind("/family/0/members/1:", 0) == 0);
  CHECK(error_of(base + R"("family": [{"members": ["a"], "zeta": 1}], "measure": {"type": "atomic", "mass": {"a": -1}}})")
            .rfind("/measure/mass/a:", 0) == 0);
  CHECK(error_of(base + R"("family": [{"members": ["a"], "zeta": 1}]})").rfind("/: missing key 'measure'", 0) == 0);
  CHECK(error_of(R"({"points": ["a", "b"], "metric": {"matrix": [[0, 1], [2, 0]]}, "family": [], "measure": {"type": "atomic", "mass": {}}})")
            .rfind("/metric:", 0) == 0);
  CHECK(error_of(base + R"("family": [{"members": ["a"]}], "measure": {"type": "atomic", "mass": {}}})").find("explicit") !=
        std::string::npos);
}

TEST_CASE("value encoding") {
  CHECK(value_json(ExtReal(3)) == Json(3));
  CHECK(value_json(ExtReal(1, 4)) == Json(0.25));
  CHECK(value_json(ExtReal(1, 3)) == Json("1/3"));
  CHECK(value_json(ExtReal::infinity()) == Json("inf"));
  CHECK(value_json(ExtReal::from_double(0.1)) == Json(0.1));
}

TEST_CASE("csv output") {
  std::string csv = profile_csv({{ExtReal(1, 3), ExtReal(2)}, {ExtReal(1), ExtReal::infinity()}});
  CHECK(csv == "scale,value\n0.33333333333333331,2\n1,inf\n");
  Json doc = {{"a", 1}, {"b", {{"c", "x,y"}}}, {"d", Json::array({true, 0.5})}};
  CHECK(json_to_csv(doc) == "key,value\na,1\nb.c,\"x,y\"\nd.0,true\nd.1,0.5\n");
}

TEST_CASE("point lists") {
  auto space = discrete(3);
  CHECK(parse_point_list(space, "p0,p2", "--set") == PointSet(3, {0, 2}));
  CHECK(parse_point_list(space, "", "--set").empty());
  CHECK_THROWS_AS(parse_point_list(space, "p0,q", "--set"), InputError);
}
