// Copyright 2026 The lexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lexdual/cli.h"
#include "lexdual/hypergraph.h"
#include "lexdual/instance.h"

namespace lexdual {
namespace {

const std::string kData = LEXDUAL_DATA_DIR;
const std::string kGolden = kData + "/golden.txt";
const std::string kCounter = kData + "/counterexample.txt";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST_CASE("check-dual") {
  Result r = Run({"check-dual", kGolden});
  CHECK(r.code == 0);
  CHECK(r.out == "DUAL\n");

  const std::string bad = WriteTemp("lexdual_not_dual.txt",
                                    "ground: a b\nA: a\nB: b\n");
  r = Run({"check-dual", bad});
  CHECK(r.code == 1);
  CHECK(r.out == "NOT DUAL: edges A1 and B1 are disjoint\n");
}

TEST_CASE("dualize and reduce") {
  const std::string dual = "o1 o3\no2 o3\no2 o4\n";
  CHECK(Run({"dualize", kGolden}).out == dual);
  CHECK(Run({"reduce", kGolden, "--family", "B"}).out == dual);
  CHECK(Run({"reduce", kGolden}).out == "o1 o2\no2 o3\no3 o4\n");
}

TEST_CASE("lexmax") {
  CHECK(Run({"lexmax", kGolden, "--via", "oracle", "--trace"}).out ==
        "o3 o4\n"
        "step 1: o3 t=3 calls=5\n"
        "step 2: o4 t=1 calls=2\n"
        "oracle calls: 7\n");
  CHECK(Run({"lexmax", kGolden, "--via", "enumerate"}).out == "o3 o4\n");
  CHECK(Run({"lexmax", kGolden, "--strategy", "dichotomy"}).out == "o3 o4\n");
  CHECK(Run({"lexmax", kGolden, "--via", "enumerate", "--trace"}).code == 2);
  CHECK(Run({"lexmax", kGolden, "--strategy", "bogus"}).code == 2);
}

TEST_CASE("witness") {
  CHECK(Run({"witness", kGolden, "--element", "o4"}).out == "o2 o4\n");
  CHECK(Run({"witness", kGolden, "--element", "o3"}).out == "o1 o3\n");
  const Result r = Run({"witness", kGolden, "--element", "o5"});
  CHECK(r.code == 2);
  CHECK(r.err == "lexdual: element o5 is not in the lexmax edge {o3 o4}\n");
  CHECK(Run({"witness", kGolden, "--element", "zz"}).code == 2);
}

TEST_CASE("gameform") {
  CHECK(Run({"gameform", kGolden}).out ==
        "o1 o2 o2 o2 o2 o2\n"
        "o3 o3 o3 o3 o2 o2\n"
        "o3 o3 o5 o3 o2 o2\n"
        "o3 o3 o3 o3 o2 o2\n"
        "o3 o3 o3 o3 o4 o4\n");
  CHECK(Run({"gameform", kGolden, "--tiebreak", "min"}).out ==
        "o1 o2 o2 o2 o2 o2\n"
        "o3 o2 o2 o2 o2 o2\n"
        "o3 o2 o2 o2 o2 o2\n"
        "o3 o2 o2 o2 o2 o2\n"
        "o3 o3 o3 o3 o4 o4\n");
}

TEST_CASE("ne and lexmax-ne") {
  Result r = Run({"ne", kCounter});
  CHECK(r.code == 0);
  CHECK(r.out == "(x1,y2) o2\n(x2,y1) o1\n");
  CHECK(Run({"lexmax-ne", kCounter, "--player", "alice"}).out ==
        "(x1,y2) o2 NE\n");
  CHECK(Run({"lexmax-ne", kCounter, "--player", "bob"}).out ==
        "(x2,y1) o1 NE\n");
  CHECK(Run({"lexmax-ne", kGolden, "--player", "alice"}).out ==
        "(A5,B5) o4 NE\n");
  r = Run({"ne", kGolden});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());

  const std::string no_prefs =
      WriteTemp("lexdual_no_prefs.txt", "ground: a\nA: a\nB: a\n");
  r = Run({"ne", no_prefs});
  CHECK(r.code == 2);
  CHECK(r.err == "lexdual: instance has no pref_a line\n");

  // Matching pennies style form: no pure equilibrium.
  const std::string pennies = WriteTemp(
      "lexdual_pennies.txt",
      "ground: w l\nM: w l\nM: l w\npref_a: w > l\npref_b: l > w\n");
  r = Run({"ne", pennies});
  CHECK(r.code == 1);
  CHECK(r.out == "NO NE\n");

  const std::string not_tight = WriteTemp(
      "lexdual_not_tight.txt",
      "ground: a b\nA: a b\nB: a\nB: b\nM: b b\npref_a: a > b\npref_b: a > b\n");
  r = Run({"lexmax-ne", not_tight, "--player", "alice"});
  CHECK(r.code == 1);
  CHECK(r.out == "NOT TIGHT: outcome b at (A1,B1) is not in A1 ∩ B1\n");
}

TEST_CASE("gen is deterministic and emits a dual pair") {
  const std::vector<std::string> args = {"gen", "--k", "5", "--m", "4",
                                         "--max-edge", "3", "--seed", "1"};
  const Result first = Run(args);
  CHECK(first.code == 0);
  CHECK(first.out == Run(args).out);
  const Instance inst = ParseInstance(first.out);
  REQUIRE(inst.a);
  REQUIRE(inst.b);
  CHECK(inst.a->size() == 4);
  CHECK(CheckDuality(*inst.a, *inst.b).holds());
  CHECK(FormatInstance(inst) == first.out);
  CHECK(Run({"gen", "--k", "5", "--m", "4", "--max-edge", "6", "--seed", "1"})
            .code == 2);
  CHECK(Run({"gen", "--k", "0", "--m", "4", "--max-edge", "1", "--seed", "1"})
            .code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(Run({}).code == 2);
  CHECK(Run({"frobnicate"}).code == 2);
  CHECK(Run({"check-dual"}).code == 2);
  Result r = Run({"check-dual", kData + "/does-not-exist.txt"});
  CHECK(r.code == 2);

  const std::string empty_edge = WriteTemp("lexdual_empty_edge.txt",
                                           "ground: a\nA:\n");
  r = Run({"dualize", empty_edge});
  CHECK(r.code == 2);
  CHECK(r.err == "lexdual: " + empty_edge + ":2:3: error: empty edge\n");

  const std::string only_a = WriteTemp("lexdual_only_a.txt", "ground: a\nA: a\n");
  r = Run({"check-dual", only_a});
  CHECK(r.code == 2);
  CHECK(r.err == "lexdual: instance has no edges for family B\n");
  CHECK(Run({"--help"}).code == 0);
}

}  // namespace
}  // namespace lexdual
