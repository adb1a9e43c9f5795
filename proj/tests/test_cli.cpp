// Copyright 2026 The densmod Authors. All Rights Reserved.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "densmod/cli.hpp"
#include "support/fixtures.hpp"

using namespace densmod;
namespace t = densmod::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "densmod");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return t::fixture_path(name); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("densmod_test_" + name);
}

}  // namespace

TEST_CASE("analyze succeeds on every good fixture") {
  for (const char* f : {"prototype.sfd", "grover.qhc", "grover_coupled.qhc", "isolated.sfd",
                        "outlier.sfd", "outlier_path.sfd", "single_edge.sfd", "design.json"}) {
    CAPTURE(f);
    const auto r = run({"analyze", fx(f)});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.empty());
    CHECK_FALSE(r.out.empty());
  }
}

TEST_CASE("analyze JSON matches the golden reports") {
  for (const char* f : {"prototype.sfd", "grover.qhc", "grover_coupled.qhc", "isolated.sfd",
                        "outlier.sfd", "outlier_path.sfd", "single_edge.sfd", "design.json"}) {
    CAPTURE(f);
    const std::string stem = std::filesystem::path(f).stem().string();
    const auto first = run({"analyze", fx(f), "--json"});
    const auto second = run({"analyze", fx(f), "--json"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == t::read_fixture("golden/" + stem + ".json"));
  }
}

TEST_CASE("exit code 1 on unreadable or malformed input") {
  auto r = run({"analyze", fx("does_not_exist.sfd")});
  CHECK(r.code == cli::kExitParseError);
  CHECK_FALSE(r.err.empty());

  const auto bad = temp_file("bad.sfd");
  std::ofstream(bad) << "structor S1 \"A\"\nprovides S1 F9\n";
  r = run({"analyze", bad.string()});
  CHECK(r.code == cli::kExitParseError);
  CHECK(r.err.find(":2:") != std::string::npos);
  std::filesystem::remove(bad);

  // Forcing the JSON reader onto a design file.
  CHECK(run({"analyze", fx("prototype.sfd"), "--format", "json"}).code == cli::kExitParseError);
  CHECK(run({"analyze"}).code == cli::kExitParseError);
  CHECK(run({"frobnicate"}).code == cli::kExitParseError);
  CHECK(run({"matrices", fx("prototype.sfd"), "modularity"}).code == cli::kExitParseError);
}

TEST_CASE("format override") {
  const auto copy = temp_file("proto.txt");
  std::filesystem::copy_file(fx("prototype.sfd"), copy,
                             std::filesystem::copy_options::overwrite_existing);
  CHECK(run({"analyze", copy.string(), "--format", "design"}).code == cli::kExitOk);
  std::filesystem::remove(copy);
}

TEST_CASE("exit code 2 on a design without edges") {
  const auto r = run({"analyze", fx("no_edges.sfd")});
  CHECK(r.code == cli::kExitInvalidDesign);
  CHECK(r.err.find("degree-sum") != std::string::npos);
  CHECK(run({"matrices", fx("no_edges.sfd"), "density"}).code == cli::kExitInvalidDesign);
  CHECK(run({"matrices", fx("no_edges.sfd"), "adjacency"}).code == cli::kExitInvalidDesign);
}

TEST_CASE("exit code 3 when derivations disagree") {
  const auto r = run({"analyze", fx("prototype.sfd"), "--tolerance", "100"});
  CHECK(r.code == cli::kExitDisagreement);
  CHECK(run({"analyze", fx("prototype.sfd"), "--tolerance", "1e-9"}).code == cli::kExitOk);
}

TEST_CASE("split") {
  auto r = run({"split", fx("outlier.sfd"), "S2", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cut"] == nlohmann::json::parse(R"([["S2","F3"]])"));
  CHECK(j["side_a"] == nlohmann::json::parse(R"(["F1","F2","S1","S2"])"));
  CHECK(j["valid"] == true);
  CHECK(j["recommended"] == false);

  r = run({"split", fx("prototype.sfd"), "F1", "--split-threshold", "0.9", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["density"] == 0.75);
  CHECK(j["recommended"] == true);
  CHECK(j["bridges"] == nlohmann::json::parse(R"([["S2","F1"]])"));

  r = run({"split", fx("prototype.sfd"), "F3"});
  CHECK(r.code == cli::kExitSplitInvalid);
  CHECK(r.out.find("valid no") != std::string::npos);

  CHECK(run({"split", fx("prototype.sfd"), "F9"}).code == cli::kExitParseError);
  CHECK(run({"split", fx("prototype.sfd"), "7"}).code == cli::kExitParseError);
  // Any member of the module selects it.
  CHECK(run({"split", fx("outlier.sfd"), "F4"}).out == run({"split", fx("outlier.sfd"), "F1"}).out);
}

TEST_CASE("matrices") {
  auto r = run({"matrices", fx("prototype.sfd"), "laplacian"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.rfind(",F1,F2,F3,F4,S1,S2,S3,S4\nF1,2,0,0,0,-1,-1,0,0\n", 0) == 0);

  const auto path = temp_file("rho.csv");
  r = run({"matrices", fx("prototype.sfd"), "density", "-o", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(path);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(first == "F1,0.2,0,0,0,-0.1,-0.1,0,0");
  in.close();
  std::filesystem::remove(path);
}

TEST_CASE("dot") {
  const auto r = run({"dot", fx("grover_coupled.qhc")});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.rfind("graph \"grover_coupled\" {", 0) == 0);
  CHECK(r.out.find("subgraph cluster_2") != std::string::npos);
  CHECK(r.out.find("subgraph cluster_3") == std::string::npos);
}
