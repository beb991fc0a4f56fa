// Copyright 2026 The fairctl Authors.
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


#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <stdexcept>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <doctest.h>

#include "fairctl/cli.hpp"

using namespace fairctl;
using namespace fairctl::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("fairctl_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("csv parsing") {
  std::istringstream in("# header\n0.5, 0.5,0\n\n1,2,3\r\n");
  const auto rows = parse_vector_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].line == 2);
  CHECK(rows[1].line == 4);
  CHECK(rows[1].values == std::vector<double>{1, 2, 3});

  auto fails_at = [](const std::string& text, std::size_t line) {
    std::istringstream s(text);
    try {
      parse_vector_csv(s);
    } catch (const InputError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(fails_at("1,2\n1,x\n", 2));
  CHECK(fails_at("1,2\n-1,2\n", 2));
  CHECK(fails_at("1,2\n1,2,3\n", 2));
  CHECK(fails_at("1,nan\n", 1));
  CHECK(fails_at("1,,2\n", 1));
  CHECK(fails_at("# only a header\n", 0));

  std::istringstream neg("-1,2\n");
  CHECK(parse_vector_csv(neg, true)[0].values[0] == -1.0);
}

TEST_CASE("csv round trip is exact") {
  const std::vector<std::vector<double>> rows{{0.1, 1.0 / 3, 2.5e-300}, {1e300, 0.0, 0.7}};
  std::stringstream ss;
  write_vector_csv(ss, rows);
  const auto back = parse_vector_csv(ss);
  REQUIRE(back.size() == 2);
  for (std::size_t r = 0; r < 2; ++r) CHECK(back[r].values == rows[r]);
}

TEST_CASE("p list and eps grid parsing") {
  const auto ps = parse_p_list("2, 3.5,INF");
  REQUIRE(ps.size() == 3);
  CHECK(ps[1].value() == 3.5);
  CHECK(ps[2].is_infinite());
  CHECK_THROWS_AS(parse_p_list("2,1"), InputError);
  CHECK_THROWS_AS(parse_p_list(""), InputError);
  CHECK(parse_eps_grid("0:1:0.5") == std::vector<double>{0, 0.5, 1});
  CHECK_THROWS_AS(parse_eps_grid("0:1"), InputError);
  CHECK_THROWS_AS(parse_eps_grid("0:1:0.1:2"), InputError);
  CHECK_THROWS_AS(parse_eps_grid("0:2:0.1"), InputError);
  CHECK_THROWS_AS(parse_eps_grid("a:1:0.1"), InputError);
}

TEST_CASE("check command") {
  TempDir dir;
  const std::string any = dir.write("any.csv", "1,0,0\n0.2,0.3,0.5\n");
  CHECK(run_cli({"check", "--eps", "0", "--p", "2", "--input", any}).code == kExitOk);

  const std::string uni = dir.write("uni.csv", "0.25,0.25,0.25,0.25\n");
  CHECK(run_cli({"check", "--eps", "1", "--p", "2", "--input", uni}).code == kExitOk);

  const std::string hh = dir.write("hh.csv", "0.5,0.5,0,0\n");
  const Run r = run_cli({"check", "--eps", "0.4", "--p", "2,3,inf", "--input", hh});
  CHECK(r.code == kExitNegative);
  const Json doc = Json::parse(r.out);
  const auto& per_p = doc["results"]["vectors"][0]["per_p"];
  CHECK(per_p[0]["member"] == true);
  CHECK(per_p[1]["member"] == false);
  CHECK(per_p[2]["member"] == false);
  CHECK(per_p[2]["p"] == "inf");
  CHECK(std::abs(per_p[0]["eps_max"].get<double>() - 0.41421356237309503) < 1e-12);

  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "version"});
  CHECK(doc["version"] == version());
}

TEST_CASE("check input errors exit 2") {
  TempDir dir;
  const std::string hh = dir.write("hh.csv", "0.5,0.5,0,0\n");
  CHECK(run_cli({"check", "--eps", "1.5", "--input", hh}).code == kExitInputError);
  CHECK(run_cli({"check", "--eps", "-0.1", "--input", hh}).code == kExitInputError);
  const std::string bad = dir.write("bad.csv", "0.5,0.5\n0.1,oops\n");
  const Run r = run_cli({"check", "--eps", "0.1", "--input", bad});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("line 2") != std::string::npos);
  const std::string zero = dir.write("zero.csv", "1,1\n0,0\n");
  const Run z = run_cli({"check", "--eps", "0.1", "--input", zero});
  CHECK(z.code == kExitInputError);
  CHECK(z.err.find("line 2") != std::string::npos);
  CHECK(run_cli({"check", "--eps", "0.1", "--input", dir.path("missing.csv")}).code == kExitInputError);
  CHECK(run_cli({"check", "--eps", "0.1", "--p", "1", "--input", hh}).code == kExitInputError);
  CHECK(run_cli({"check", "--input", hh}).code == kExitInputError);
  CHECK(run_cli({"frobnicate"}).code == kExitInputError);
  CHECK(run_cli({}).code == kExitInputError);
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("epsmax command") {
  TempDir dir;
  const std::string unit = dir.write("unit.csv", "1,0,0\n0,1,0\n0,0,1\n");
  const Run r = run_cli({"epsmax", "--p", "2", "--input", unit});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc["results"]["vectors"].size() == 3);
  for (const auto& v : doc["results"]["vectors"]) CHECK(v["eps_max"][0]["eps_max"] == 0.0);
}

TEST_CASE("project command") {
  TempDir dir;
  const std::string y = dir.write("y.csv", "1,0,0\n0.9,-0.2,0.4\n");
  const Run r = run_cli({"project", "--eps", "0.5", "--p", "inf", "--input", y});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  const auto pt = doc["results"]["points"][0]["point"].get<std::vector<double>>();
  CHECK(pt[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(pt[1] == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(run_cli({"project", "--eps", "0.5", "--p", "2,3", "--input", y}).code == kExitInputError);
  CHECK(run_cli({"project", "--eps", "0.5", "--n", "4", "--input", y}).code == kExitInputError);
}

TEST_CASE("solve command") {
  TempDir dir;
  const std::string c = dir.write("c.csv", "3,2,1\n");
  const Run r = run_cli({"solve", "--objective", c, "--eps", "0.5", "--p", "inf"});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(std::abs(doc["results"]["objective_value"].get<double>() - 2.5) < 1e-6);
  CHECK(doc["results"]["converged"] == true);

  CHECK(run_cli({"solve", "--objective", c, "--eps", "0.5", "--n", "4"}).code == kExitInputError);
  const std::string two = dir.write("two.csv", "1,2\n3,4\n");
  CHECK(run_cli({"solve", "--objective", two, "--eps", "0.5"}).code == kExitInputError);
  const Run capped = run_cli({"solve", "--objective", c, "--eps", "0.5", "--max-iter", "2"});
  CHECK(capped.code == kExitNegative);
}

TEST_CASE("sweep command writes plot data") {
  TempDir dir;
  const std::string c = dir.write("c.csv", "3,2,1\n");
  const std::string csv = dir.path("front.csv");
  const std::string json = dir.path("front.json");
  const Run r = run_cli({"sweep", "--objective", c, "--p", "inf", "--eps-grid", "0:1:0.5",
                         "--emit-csv", csv, "--out", json});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  const Json doc = Json::parse(slurp(json));
  CHECK(doc["command"] == "sweep");
  REQUIRE(doc["results"]["points"].size() == 3);

  std::istringstream lines(slurp(csv));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "epsilon,objective,cv,cv_bound");
  const auto rows = parse_vector_csv(lines, true);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].values[0] == 0.0);
  CHECK(rows[0].values[1] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rows[1].values[1] == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(rows[2].values[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(rows[2].values[2]) < 1e-6);
  CHECK(rows[2].values[3] == 0.0);

  CHECK(run_cli({"sweep", "--objective", c, "--eps-grid", "0:1"}).code == kExitInputError);
  CHECK(run_cli({"sweep", "--objective", c, "--eps-grid", "1:0:0.1"}).code == kExitInputError);
}

TEST_CASE("verify command") {
  const std::vector<std::string> args{"verify", "--suite", "corner,cv-bound", "--samples", "300",
                                      "--n-values", "2,3", "--seed", "7"};
  const Run a = run_cli(args);
  const Run b = run_cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "2"});
  CHECK(run_cli(threaded).out == a.out);

  const Json doc = Json::parse(a.out);
  CHECK(doc["seed"] == 7);
  CHECK(doc["results"]["passed"] == true);
  CHECK(doc["results"]["suites"].size() == 2);

  CHECK(run_cli({"verify", "--suite", "bogus"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--seed", "-3"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--n-values", "1,2"}).code == kExitInputError);
}

TEST_CASE("verify takes its default seed from FAIRCTL_SEED") {
  const std::vector<std::string> args{"verify", "--suite", "corner", "--samples", "50", "--n-values", "3"};
  ::setenv("FAIRCTL_SEED", "1234", 1);
  const Run a = run_cli(args);
  ::setenv("FAIRCTL_SEED", "junk", 1);
  const Run bad = run_cli(args);
  ::unsetenv("FAIRCTL_SEED");
  const Run def = run_cli(args);
  CHECK(Json::parse(a.out)["seed"] == 1234);
  CHECK(bad.code == kExitInputError);
  CHECK(Json::parse(def.out)["seed"] == 42);
}

TEST_CASE("installed binary follows the exit code contract") {
  TempDir dir;
  const std::string hh = dir.write("hh.csv", "0.5,0.5,0,0\n");
  const std::string bin = FAIRCTL_BINARY;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("check --eps 0.3 --p 2 --input " + hh) == 0);
  CHECK(status("check --eps 0.4 --p 2,3 --input " + hh) == 1);
  CHECK(status("check --eps 3 --input " + hh) == 2);
  CHECK(status("--version") == 0);
}
