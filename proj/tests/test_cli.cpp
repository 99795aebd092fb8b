// Copyright 2026 The polya-cert Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;
using polya::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("polya-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("certify and verify round trip") {
  TempDir dir;
  const std::string cert = dir.file("cert.json");
  const Outcome c = invoke({"certify", "--paper-range", "--eps", "1/1000", "-o", cert});
  CHECK(c.code == 0);
  const auto lines = lines_of(c.out);
  // Range line, header, 13 steps, the final lambda and the summary.
  REQUIRE(lines.size() == 17);
  CHECK(lines[1] == "step\tlambda\te_lower\tdelta_lower");
  CHECK(lines[2] == "1\t3\t3/4\t6/13");
  CHECK(lines[15] == "14\t495/34");
  CHECK(lines[16] == "Success in 13 steps");
  const std::string json = slurp(cert);
  CHECK(json.find("\"45/13\"") != std::string::npos);

  const Outcome v = invoke({"verify", cert});
  CHECK(v.code == 0);
  CHECK(v.out.find("VERIFIED") != std::string::npos);

  SUBCASE("tampered") {
    std::string bad = json;
    const auto pos = bad.find("\"6/13\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 6, "\"7/13\"");
    std::ofstream(dir.file("bad.json")) << bad;
    const Outcome t = invoke({"verify", dir.file("bad.json")});
    CHECK(t.code == 2);
    CHECK(t.err.find("step 1") != std::string::npos);
  }
  SUBCASE("truncated") {
    std::ofstream(dir.file("cut.json")) << json.substr(0, json.size() / 3);
    CHECK(invoke({"verify", dir.file("cut.json")}).code == 3);
  }
  SUBCASE("missing") { CHECK(invoke({"verify", dir.file("nope.json")}).code == 3); }
}

TEST_CASE("certify variants") {
  const Outcome short_run = invoke({"certify", "--start", "3", "--target", "4"});
  CHECK(short_run.code == 0);
  CHECK(short_run.out.find("Success in") != std::string::npos);
  CHECK(lines_of(short_run.out).size() <= 2 + 3 + 2);

  const Outcome gap = invoke({"certify"});
  CHECK(gap.code == 0);
  CHECK(gap.out.find("Success in") != std::string::npos);

  const Outcome json = invoke({"certify", "--start", "3", "--target", "4", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"lambda_target\"") != std::string::npos);

  const Outcome coarse = invoke({"certify", "--eps", "1/2"});
  CHECK(coarse.code == 2);
  CHECK(coarse.err.find("EPS_TOO_COARSE") != std::string::npos);

  CHECK(invoke({"certify", "--start", "5", "--target", "5"}).code != 0);
  CHECK(invoke({"certify", "--paper-range", "-o", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("count") {
  const Outcome n = invoke({"count", "-d", "2", "--kind", "N", "--lambda", "3"});
  CHECK(n.code == 0);
  CHECK(n.out.starts_with("3"));
  CHECK(invoke({"count", "--kind", "D", "--lambda", "3"}).out.starts_with("1"));
  CHECK(invoke({"count", "--certified-lower", "--lambda", "8"}).out.starts_with("19"));
  const Outcome js = invoke({"count", "--kind", "D", "--lambda", "3", "--format", "json"});
  CHECK(js.out.find("\"value\":1") != std::string::npos);
  const Outcome csv = invoke({"count", "--kind", "N", "--start", "1", "--stop", "3", "--step", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  const auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "lambda_num,lambda_den,value,rigor");
  CHECK(rows[3] == "3,1,3,certified-exact");
  CHECK(invoke({"count", "--kind", "N", "--alpha", "1", "--lambda", "3"}).out.starts_with("2"));

  const Outcome unresolved = invoke({"count", "--kind", "D", "--lambda", "2356194490192344928846982537460/1000000000000000000000000000000"});
  CHECK(unresolved.code == 2);
  CHECK(unresolved.err.find("UNRESOLVED_FLOOR") != std::string::npos);

  CHECK(invoke({"count", "--lambda", "abc"}).code != 0);
  CHECK(invoke({"count", "-d", "3", "--kind", "N", "--lambda", "3"}).code != 0);
}

TEST_CASE("oracle") {
  const Outcome o = invoke({"oracle", "--d", "2", "--lambda-max", "20"});
  CHECK(o.code == 0);
  CHECK(o.out.find("violations: 0") != std::string::npos);
  const Outcome sector = invoke({"oracle", "--alpha", "1/2", "--lambda-max", "10"});
  CHECK(sector.code == 0);
  CHECK(sector.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("plotdata") {
  const Outcome p = invoke({"plotdata", "--stop", "15", "--step", "1/20"});
  CHECK(p.code == 0);
  const auto lines = lines_of(p.out);
  REQUIRE(lines.size() > 10);
  CHECK(lines[0].starts_with("#"));
  CHECK(lines[0].find("non-certified") != std::string::npos);
  CHECK(lines[1] == "lambda,P_D2,P_N2,W2,P_N2_over_W2_minus_1,N_D_disk,N_N_disk");
  // The last column group near lambda = 15 has P_N2 above the Weyl term.
  const std::string& last = lines.back();
  std::vector<std::string> cells;
  std::istringstream row(last);
  for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
  REQUIRE(cells.size() == 7);
  CHECK(std::stod(cells[0]) == doctest::Approx(15.0));
  CHECK(std::stod(cells[4]) > 0);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"count", "--eps", "1/0", "--lambda", "3"}).code != 0);
}
