// Copyright 2026 The qdiv Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdiv/cli.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/presets.hpp"

using namespace qdiv;

namespace {

RunConfig config(std::string command, std::string preset, std::string grid = "") {
  RunConfig c;
  c.command = std::move(command);
  c.preset = std::move(preset);
  if (!grid.empty()) c.grid = parse_grid(grid);
  return c;
}

std::vector<double> csv_column(const std::string& csv, int col) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<double> out;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    for (int i = 0; i <= col; ++i) std::getline(row, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

std::string command_for(const PresetInfo& p) {
  if (p.kind == PresetKind::Gaussian) return "gaussian";
  if (p.kind == PresetKind::Idempotent) return "idempotent";
  if (p.name == "schur") return "schur";
  return "scan-p";
}

}  // namespace

TEST_CASE("grid parsing") {
  GridSpec g = parse_grid("0.05:0.45:41");
  CHECK(g.t_min == 0.05);
  CHECK(g.t_max == 0.45);
  CHECK(g.points == 41);
  CHECK_THROWS_AS(parse_grid("0.1:0.2"), ConfigError);
  CHECK_THROWS_AS(parse_grid("a:0.2:3"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0.1:0.2:3x"), ConfigError);
}

TEST_CASE("config validation names the field") {
  auto field_of = [](const RunConfig& c) {
    try {
      validate(c);
    } catch (const ConfigError& e) {
      return e.field;
    }
    return std::string();
  };
  CHECK(field_of(config("scan-x", "schur")) == "command");
  CHECK(field_of(config("scan-p", "")) == "preset");
  CHECK(field_of(config("scan-p", "nope")) == "preset");
  CHECK(field_of(config("scan-p", "schur", "0.4:0.1:5")) == "grid");
  CHECK(field_of(config("scan-p", "schur", "0.1:0.4:1")) == "grid");
  RunConfig h = config("scan-p", "schur");
  h.h = -1.0;
  CHECK(field_of(h) == "h");
  CHECK(field_of(config("scan-p", "schur")).empty());
}

TEST_CASE("JSON config merge") {
  RunConfig c = merge_config(RunConfig{}, Json::parse(R"({
    "command": "scan-cp", "preset": "generic-noncp", "grid": "0.1:0.9:17",
    "tol_slope": 1e-5, "seed": 7, "n": 3})"));
  CHECK(c.command == "scan-cp");
  CHECK(c.grid->points == 17);
  CHECK(c.tol_slope == 1e-5);
  CHECK(c.seed == 7);
  CHECK(c.n == 3);
  RunConfig d = merge_config(c, Json::parse(R"({"grid": {"t_min": 0, "t_max": 1, "points": 3}})"));
  CHECK(d.grid->t_max == 1.0);
  CHECK(d.command == "scan-cp");
  CHECK_THROWS_AS(merge_config(c, Json::parse(R"({"seed": "x"})")), ConfigError);
  CHECK_THROWS_AS(merge_config(c, Json::parse("[1]")), ConfigError);
}

TEST_CASE("schur scan exits 2 with a constant derivative column") {
  RunConfig c = config("scan-p", "schur", "0.05:0.45:41");
  c.n = 8;
  RunResult r = run(c);
  CHECK(r.exit_code == 2);
  std::vector<double> d = csv_column(r.csv, 3);
  REQUIRE(d.size() == 41);
  for (double x : d) CHECK(std::abs(x - d.front()) <= 1e-6);
  CHECK(d.front() > 0);
}

TEST_CASE("generic non-CP scan exits 2 with derivative 4") {
  RunResult r = run(config("scan-cp", "generic-noncp", "0.1:0.9:17"));
  CHECK(r.exit_code == 2);
  CHECK(r.report.at("verdict") == "NOT_CP_DIVISIBLE");
  CHECK(std::abs(r.report.at("derivative").get<double>() - 4.0) <= 1e-4);
}

TEST_CASE("beam-splitter scan flags every grid point") {
  RunResult r = run(config("gaussian", "example-4.1", "1.1:3.0:20"));
  CHECK(r.exit_code == 2);
  std::vector<double> flags = csv_column(r.csv, 3);
  REQUIRE(flags.size() == 20);
  for (double f : flags) CHECK(f == 1.0);
}

TEST_CASE("three-mode example reports the failing factor") {
  RunResult r = run(config("gaussian", "example-4.2"));
  CHECK(r.exit_code == 1);
  CHECK(r.report.at("offending_factor") == "R1");
  CHECK(r.report.contains("claimed_onset"));
}

TEST_CASE("unknown preset and mismatched command are errors") {
  CHECK(run(config("scan-p", "nope")).exit_code == 1);
  CHECK(run(config("scan-p", "example-4.1")).exit_code == 1);
}

TEST_CASE("same seed gives identical artifacts") {
  RunConfig c = config("scan-p", "depolarizing", "0.1:0.9:9");
  c.seed = 42;
  RunResult a = run(c), b = run(c);
  CHECK(a.csv == b.csv);
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("every preset runs end to end") {
  for (const PresetInfo& p : list_presets()) {
    auto start = std::chrono::steady_clock::now();
    RunResult r = run(config(command_for(p), p.name));
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    INFO(p.name << " exit " << r.exit_code << " " << r.report.dump());
    if (p.name == "example-4.2")
      CHECK(r.exit_code == 1);
    else
      CHECK(r.exit_code != 1);
    CHECK(secs < 60.0);
  }
}

TEST_CASE("command line entry point writes artifacts") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qdiv_cli_test";
  fs::create_directories(dir);
  std::string prefix = (dir / "run").string();
  const char* argv[] = {"qdiv", "scan-p", "--preset", "schur", "--n", "4",
                        "--grid", "0.1:0.4:4", "--out", prefix.c_str()};
  std::ostringstream out, err;
  CHECK(cli_main(10, argv, out, err) == 2);
  CHECK(fs::exists(prefix + ".json"));
  CHECK(fs::exists(prefix + ".csv"));
  std::ifstream js(prefix + ".json");
  CHECK(Json::parse(js).at("verdict") == "NOT_P_DIVISIBLE");
  CHECK(out.str().rfind("NOT_P_DIVISIBLE", 0) == 0);

  const char* bad[] = {"qdiv", "scan-p", "--preset", "nope"};
  std::ostringstream o2, e2;
  CHECK(cli_main(4, bad, o2, e2) == 1);
  CHECK(e2.str().find("error") != std::string::npos);

  const char* list[] = {"qdiv", "--list-presets"};
  std::ostringstream o3, e3;
  CHECK(cli_main(2, list, o3, e3) == 0);
  CHECK(o3.str().find("example-4.1") != std::string::npos);
  fs::remove_all(dir);
}
