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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdiv/io.hpp"

namespace qdiv {

struct GridSpec {
  double t_min;
  double t_max;
  int points;
};

// "a:b:N"
GridSpec parse_grid(const std::string& text);

struct RunConfig {
  std::string command;  // scan-p, scan-cp, idempotent, schur, gaussian, intermediate
  std::string preset;
  std::optional<GridSpec> grid;
  std::optional<double> h;
  double tol_slope = 1e-6;
  std::uint64_t seed = 1;
  int n = 0;
  int k = 0;
  int samples = 200;
  std::optional<double> s;  // intermediate
  std::optional<double> t;
  std::string out;  // prefix for <out>.json and <out>.csv; empty means stdout
};

const std::vector<std::string>& commands();

// Throws ConfigError naming the offending field.
void validate(const RunConfig& cfg);
// Fields of a JSON object override cfg; keys mirror the long flags with
// '-' replaced by '_'.
RunConfig merge_config(RunConfig cfg, const Json& j);
RunConfig load_config_file(RunConfig cfg, const std::string& path);

struct RunResult {
  int exit_code = 0;  // 0 clean, 2 violation, 1 error
  Json report;
  std::string csv;
};

// Does not write files; errors are returned with exit code 1.
RunResult run(const RunConfig& cfg);

// Full command line entry point; writes artifacts.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace qdiv
