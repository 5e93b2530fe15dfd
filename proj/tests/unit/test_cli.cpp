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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "areaform/cli.hpp"
#include "areaform/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace areaform;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "areaform_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto path = scratch(name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

const char* kSingleton = R"({
  "points": ["a", "b", "c"],
  "metric": {"matrix": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]},
  "family": [{"members": ["a"], "zeta": 2}, {"members": ["b"], "zeta": 1}, {"members": ["c"], "zeta": 6}],
  "gauge": {"type": "explicit"},
  "measure": {"type": "atomic", "mass": {"a": 1, "b": 2, "c": 3}}
})";

}  // namespace

TEST_CASE("cli area-check on the singleton instance") {
  auto path = write("singleton.json", kSingleton);
  auto r = run({"area-check", path, "--variant", "general-I", "--set", "a,c"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["verdict"] == "equal");
  CHECK(doc["lhs"] == 4);
  CHECK(doc["rhs"] == 4);
  CHECK(doc["backend"] == "rational");
  CHECK(doc["hypotheses"]["all_verified"] == true);

  auto failing = run({"area-check", path, "--variant", "hausdorff-I"});
  CHECK(failing.code == 1);
  CHECK(Json::parse(failing.out)["verdict"] == "hypotheses-failed");
}

TEST_CASE("cli measure on cantor(4)") {
  auto gen = run({"gen", "cantor", "--depth", "4"});
  REQUIRE(gen.code == 0);
  auto path = write("cantor4.json", gen.out);
  auto r = run({"measure", path, "--alpha", "0.6309297535714574", "--delta", "0.2"});
  REQUIRE(r.code == 0);
  double value = Json::parse(r.out)["value"].get<double>();
  CHECK(std::abs(value - 1.0) <= 1e-9);

  // Reloading the generated file gives the same file.
  auto again = run({"gen", "cantor", "--depth", "4", "--out", scratch("cantor4b.json").string()});
  CHECK(again.code == 0);
  CHECK(save_instance(load_instance_file(scratch("cantor4b.json"))) == gen.out);

  auto profile = run({"measure", path, "--alpha", "0.6309297535714574", "--profile"});
  CHECK(profile.code == 0);
  CHECK(profile.out.rfind("scale,value\n", 0) == 0);
  CHECK(profile.out.find('\r') == std::string::npos);
}

TEST_CASE("cli exit codes and errors") {
  auto path = write("singleton.json", kSingleton);
  auto bad_point = run({"area-check", path, "--set", "a,q"});
  CHECK(bad_point.code == 2);
  CHECK(bad_point.err.find("--set, column 3") != std::string::npos);

  auto bad_json = write("bad.json", "{\n  \"points\": [\"a\",\n");
  auto syntax = run({"measure", bad_json});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("line 3") != std::string::npos);

  CHECK(run({"measure", path, "--delta", "-1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"area-check", path, "--variant", "general-III"}).code == 2);
  CHECK(run({"measure", scratch("missing.json").string()}).code == 2);

  // Exit code follows the verdict, not the output size or format.
  auto csv = run({"area-check", path, "--out", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
}

TEST_CASE("cli density, lemmas, abscont, enlarge") {
  auto path = write("singleton.json", kSingleton);
  auto d = run({"density", path, "--point", "c"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["points"][0]["density"] == 0.5);

  auto profile = run({"density", path, "--point", "b", "--profile"});
  CHECK(profile.out == "scale,value\n1,2\n");

  auto lemmas = run({"lemmas", path, "--t", "10"});
  CHECK(lemmas.code == 1);  // major lemma gate: F > 10 fails
  auto doc = Json::parse(lemmas.out);
  CHECK(doc["minor"]["passed"] == true);
  CHECK(doc["major"]["checked"] == false);

  auto abscont = run({"abscont", path});
  CHECK(abscont.code == 0);
  CHECK(Json::parse(abscont.out)["agree"] == true);

  auto enlarge = run({"enlarge", path, "--set", "a"});
  CHECK(enlarge.code == 0);
  CHECK(Json::parse(enlarge.out)["hat"] == Json::array({"a"}));
  CHECK(Json::parse(enlarge.out)["tau"]["default"] == true);
  auto wider = Json::parse(run({"enlarge", path, "--set", "a", "--tau", "3"}).out);
  CHECK(wider["tau"]["value"] == 3);
  CHECK(wider["tau"]["default"] == false);
}

TEST_CASE("cli probes and hunt") {
  auto gen = run({"gen", "epsilon-net", "--h", "1/16", "--backend", "float"});
  REQUIRE(gen.code == 0);
  auto path = write("net.json", gen.out);
  CHECK(run({"probe", path, "--point", "p8"}).code == 0);
  CHECK(run({"probe", path, "--kind", "ball-diameter", "--point", "p8"}).code == 0);
  CHECK(run({"probe", path, "--kind", "spherical", "--point", "p8", "--tolerance", "1e-6"}).code == 0);
  CHECK(run({"probe", path, "--kind", "semicontinuity", "--delta", "0.5", "--t", "0.01"}).code == 0);
  CHECK(run({"probe", path, "--kind", "semicontinuity", "--delta", "1/16", "--t", "0.01"}).code == 2);

  auto hunt = run({"hunt", "--instances", "20", "--seed", "3", "--threads", "1"});
  CHECK(hunt.code == 0);
  CHECK(Json::parse(hunt.out)["counterexamples"].empty());
}
