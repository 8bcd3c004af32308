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

#include "qdiv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qdiv/errors.hpp"
#include "qdiv/presets.hpp"

namespace qdiv {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"scan-p",  "scan-cp",  "idempotent",
                                          "schur",   "gaussian", "intermediate"};
  return c;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("grid", "expected t_min:t_max:points");
  try {
    std::size_t used = 0;
    GridSpec g{};
    g.t_min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("t_min");
    g.t_max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("t_max");
    g.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("points");
    return g;
  } catch (const std::logic_error&) {
    throw ConfigError("grid", "could not parse '" + text + "'");
  }
}

void validate(const RunConfig& cfg) {
  if (std::find(commands().begin(), commands().end(), cfg.command) ==
      commands().end())
    throw ConfigError("command", "unknown command '" + cfg.command + "'");
  if (cfg.preset.empty() && cfg.command != "schur")
    throw ConfigError("preset", "a preset is required");
  if (!cfg.preset.empty()) find_preset(cfg.preset);
  if (cfg.grid) {
    if (cfg.grid->points < 2) throw ConfigError("grid", "points must be >= 2");
    if (!(cfg.grid->t_min < cfg.grid->t_max))
      throw ConfigError("grid", "t_min must be < t_max");
  }
  if (cfg.h && !(*cfg.h > 0)) throw ConfigError("h", "must be > 0");
  if (!(cfg.tol_slope > 0)) throw ConfigError("tol_slope", "must be > 0");
  if (cfg.n < 0) throw ConfigError("n", "must be >= 1");
  if (cfg.k < 0) throw ConfigError("k", "must be >= 1");
  if (cfg.samples < 1) throw ConfigError("samples", "must be >= 1");
}

RunConfig merge_config(RunConfig cfg, const Json& j) {
  if (!j.is_object()) throw ConfigError("config", "top level must be an object");
  auto field = [&](const char* key, auto& target) {
    if (!j.contains(key)) return;
    try {
      using T = std::decay_t<decltype(target)>;
      if constexpr (std::is_same_v<T, std::optional<double>>)
        target = j.at(key).get<double>();
      else
        target = j.at(key).get<T>();
    } catch (const Json::exception& e) {
      throw ConfigError(key, e.what());
    }
  };
  field("command", cfg.command);
  field("preset", cfg.preset);
  field("h", cfg.h);
  field("tol_slope", cfg.tol_slope);
  field("seed", cfg.seed);
  field("n", cfg.n);
  field("k", cfg.k);
  field("samples", cfg.samples);
  field("s", cfg.s);
  field("t", cfg.t);
  field("out", cfg.out);
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.is_string()) {
      cfg.grid = parse_grid(g.get<std::string>());
    } else {
      try {
        cfg.grid = GridSpec{g.at("t_min").get<double>(),
                            g.at("t_max").get<double>(),
                            g.at("points").get<int>()};
      } catch (const Json::exception& e) {
        throw ConfigError("grid", e.what());
      }
    }
  }
  return cfg;
}

RunConfig load_config_file(RunConfig cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", e.what());
  }
  return merge_config(std::move(cfg), j);
}

namespace {

std::vector<double> grid_or_default(const RunConfig& cfg, const TimeDomain& dom,
                                    int points = 21) {
  if (cfg.grid) return linspace(cfg.grid->t_min, cfg.grid->t_max, cfg.grid->points);
  const double m = 0.05 * dom.length();
  return linspace(dom.t_min + m, dom.t_max - m, points);
}

PresetOptions options(const RunConfig& cfg) {
  return {cfg.n, cfg.k, cfg.seed};
}

Json grid_json(const std::vector<double>& g) { return g; }

RunResult run_scan(const RunConfig& cfg, bool cp) {
  DynamicalFamily fam = make_channel_family(cfg.preset, options(cfg));
  std::vector<double> grid = grid_or_default(cfg, fam.domain());
  const double h = cfg.h.value_or(default_step(fam.domain()));
  DivisibilityReport rep =
      cp ? cp_divisibility_scan(fam, preset_cp_witnesses(cfg.preset, fam, cfg.seed),
                                grid, h, cfg.tol_slope)
         : p_divisibility_scan(fam, preset_p_witnesses(cfg.preset, fam, cfg.seed),
                               grid, h, cfg.tol_slope);
  RunResult r;
  r.report = report_to_json(rep);
  r.report["command"] = cfg.command;
  r.report["preset"] = cfg.preset;
  r.report["dim"] = fam.dim();
  r.report["h"] = h;
  std::ostringstream csv;
  write_sweep_csv(csv, rep);
  r.csv = csv.str();
  r.exit_code = is_violation(rep.verdict) ? 2 : 0;
  return r;
}

RunResult run_schur(const RunConfig& cfg) {
  SchurFamilyConfig sc;
  sc.n_trunc = cfg.n > 0 ? cfg.n : 8;
  DynamicalFamily fam = schur_family(sc);
  std::vector<double> grid = grid_or_default(cfg, fam.domain());
  const double h = cfg.h.value_or(default_step(fam.domain()));
  std::vector<GrowthRow> rows = witness_growth(sc.n_trunc, grid, h);
  DivisibilityReport p = p_divisibility_scan(
      fam, {schur_witness(sc.n_trunc, sc.n_trunc)}, grid, h, cfg.tol_slope);
  DivisibilityReport c = cp_divisibility_scan(
      fam, {schur_cp_witness(sc.n_trunc, sc.n_trunc)}, grid, h, cfg.tol_slope);
  RunResult r;
  r.report = {{"command", "schur"},
              {"n", sc.n_trunc},
              {"h", h},
              {"verdict", to_string(p.verdict)},
              {"cp_verdict", to_string(c.verdict)},
              {"derivative", p.max_derivative},
              {"cp_derivative", c.max_derivative},
              {"closed_form_derivative", witness_slope(sc.n_trunc)},
              {"grid", grid_json(grid)}};
  std::ostringstream csv;
  write_growth_csv(csv, rows, sc.n_trunc);
  r.csv = csv.str();
  r.exit_code = is_violation(p.verdict) || is_violation(c.verdict) ? 2 : 0;
  return r;
}

RunResult run_gaussian(const RunConfig& cfg) {
  if (find_preset(cfg.preset).kind != PresetKind::Gaussian)
    throw ConfigError("preset", "'" + cfg.preset + "' is not a Gaussian preset");
  GaussianFamily fam = make_gaussian_family(cfg.preset);
  std::vector<double> grid = grid_or_default(cfg, fam.domain());
  const double h = cfg.h.value_or(default_step(fam.domain()));
  DetScanReport rep = det_criterion_scan(fam, grid, h, cfg.tol_slope);
  RunResult r;
  r.report = {{"command", "gaussian"},
              {"preset", cfg.preset},
              {"modes", fam.modes()},
              {"h", h},
              {"verdict", rep.violation ? "NOT_P_DIVISIBLE" : "P_EVIDENCE"},
              {"grid", grid_json(grid)},
              {"note", "the determinant criterion is a necessary condition "
                       "for P-divisibility"}};
  if (rep.first_violation_t)
    r.report["first_violation_t"] = *rep.first_violation_t;
  else
    r.report["first_violation_t"] = nullptr;
  std::ostringstream csv;
  write_det_csv(csv, rep);
  r.csv = csv.str();
  r.exit_code = rep.violation ? 2 : 0;
  return r;
}

Json coeffs_json(const Coeffs4& c) { return {c[0], c[1], c[2], c[3]}; }

RunResult run_idempotent(const RunConfig& cfg) {
  if (find_preset(cfg.preset).kind != PresetKind::Idempotent)
    throw ConfigError("preset", "'" + cfg.preset + "' is not an idempotent preset");
  const int n = cfg.n > 0 ? cfg.n : 2, k = cfg.k > 0 ? cfg.k : 2;
  CoefficientFunction f = idempotent_coefficients(cfg.preset);
  TimeDomain dom = idempotent_domain(cfg.preset);
  DynamicalFamily fam = make_family(f, n, k, dom, 11, cfg.preset);
  std::vector<double> grid =
      cfg.grid ? linspace(cfg.grid->t_min, cfg.grid->t_max, cfg.grid->points)
               : linspace(dom.t_min, dom.t_max, 11);
  const double h = cfg.h.value_or(default_step(dom));

  Json table = Json::array();
  bool not_p = false, not_cp = false, not_div = false;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      PairClassification pc =
          classify_pair(f, n, k, grid[i], grid[j], std::min(cfg.samples, 50),
                        cfg.seed + i * grid.size() + j);
      Json row{{"s", pc.s}, {"t", pc.t}, {"invertible", pc.invertible},
               {"regime", to_string(pc.regime)}, {"dense_cp", pc.dense_cp},
               {"dense_p", pc.dense_p}};
      row["divisor"] = pc.divisor ? coeffs_json(*pc.divisor) : Json(nullptr);
      row["kernel_ok"] = pc.kernel_ok ? Json(*pc.kernel_ok) : Json(nullptr);
      table.push_back(std::move(row));
      if (!pc.invertible) {
        not_div |= !*pc.kernel_ok;
        continue;
      }
      switch (pc.regime) {
        case Regime::NotP:
          not_p = true;
          break;
        case Regime::PNotCp:
          not_cp = true;
          break;
        case Regime::CpDivisible:
          break;
        case Regime::Undetermined:
          not_p |= !pc.dense_p;
          not_cp |= !pc.dense_cp;
          break;
      }
    }

  std::vector<double> inner;
  for (double t : grid)
    if (dom.contains(t - h) && dom.contains(t + h)) inner.push_back(t);
  DivisibilityReport scan =
      p_divisibility_scan(fam, default_witnesses(fam.dim(), cfg.seed), inner, h,
                          cfg.tol_slope);

  Verdict v = not_div  ? Verdict::NotDivisible
              : not_p  ? Verdict::NotPDivisible
              : not_cp ? Verdict::NotCpDivisible
                       : Verdict::CpEvidence;
  RunResult r;
  r.report = {{"command", "idempotent"},
              {"preset", cfg.preset},
              {"n", n},
              {"k", k},
              {"verdict", to_string(v)},
              {"scan_verdict", to_string(scan.verdict)},
              {"scan_derivative", scan.max_derivative},
              {"divisor_coeffs", std::move(table)}};
  std::ostringstream csv;
  write_sweep_csv(csv, scan);
  r.csv = csv.str();
  r.exit_code = is_violation(v) ? 2 : 0;
  return r;
}

RunResult run_intermediate(const RunConfig& cfg) {
  DynamicalFamily fam = make_channel_family(cfg.preset, options(cfg));
  const TimeDomain& dom = fam.domain();
  const double s = cfg.s.value_or(dom.t_min + 0.25 * dom.length());
  const double t = cfg.t.value_or(dom.t_min + 0.75 * dom.length());
  if (!(s < t)) throw ConfigError("s", "must be < t");
  RunResult r;
  r.report = {{"command", "intermediate"}, {"preset", cfg.preset},
              {"s", s}, {"t", t}};
  Verdict v;
  try {
    IntermediateMap im = intermediate_map(fam, s, t, kRcond, cfg.samples, cfg.seed);
    r.report["p"] = im.p;
    r.report["cp"] = im.cp;
    r.report["map"] = channel_to_json(im.map);
    r.report["max_contractivity_excess"] = im.evidence.max_excess;
    if (im.evidence.witness)
      r.report["witness_matrix"] = complex_matrix_to_json(im.evidence.witness->matrix());
    v = !im.p ? Verdict::NotPDivisible
        : !im.cp ? Verdict::NotCpDivisible
                 : Verdict::CpEvidence;
  } catch (const SingularChannel& e) {
    bool ok = kernel_inclusion_divisible(fam, s, t);
    r.report["singular_values"] = e.singular_values;
    r.report["kernel_ok"] = ok;
    r.report["note"] =
        "Lambda_s is not invertible at this truncation; only kernel inclusion "
        "is reported";
    v = ok ? Verdict::DivisibleKernelOk : Verdict::NotDivisible;
  }
  r.report["verdict"] = to_string(v);
  std::ostringstream csv;
  csv << "t,witness_id,value,derivative,flag\n";
  r.csv = csv.str();
  r.exit_code = is_violation(v) ? 2 : 0;
  return r;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    validate(cfg);
    if (cfg.command == "scan-p") return run_scan(cfg, false);
    if (cfg.command == "scan-cp") return run_scan(cfg, true);
    if (cfg.command == "schur") return run_schur(cfg);
    if (cfg.command == "gaussian") return run_gaussian(cfg);
    if (cfg.command == "idempotent") return run_idempotent(cfg);
    return run_intermediate(cfg);
  } catch (const std::exception& e) {
    RunResult r;
    r.exit_code = 1;
    r.report = {{"command", cfg.command}, {"preset", cfg.preset},
                {"error", e.what()}};
    if (const auto* ns = dynamic_cast<const NotSymplectic*>(&e)) {
      r.report["offending_factor"] = ns->factor;
      if (cfg.preset == "example-4.2")
        r.report["claimed_onset"] = example_4_2_claimed_onset();
    }
    if (const auto* ce = dynamic_cast<const ConfigError*>(&e))
      r.report["field"] = ce->field;
    return r;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Divisibility tests for quantum dynamical maps", "qdiv"};
  app.set_help_flag("--help", "print help and exit");
  std::string command, preset, config, grid, out_prefix;
  double h = 0, tol = 0, s = 0, t = 0;
  std::uint64_t seed = 1;
  int n = 0, k = 0, samples = 0;
  bool list = false;
  app.add_option("command", command, "scan-p | scan-cp | idempotent | schur | "
                                     "gaussian | intermediate");
  app.add_option("--preset", preset, "family preset");
  app.add_option("--config", config, "JSON config file");
  app.add_option("--grid", grid, "time grid t_min:t_max:points");
  app.add_option("--h", h, "finite-difference step");
  app.add_option("--tol-slope", tol, "derivative threshold");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--n", n, "dimension, blocks or truncation");
  app.add_option("--k", k, "block dimension");
  app.add_option("--s", s, "earlier time for intermediate");
  app.add_option("--t", t, "later time for intermediate");
  app.add_option("--samples", samples, "contractivity samples");
  app.add_option("--out", out_prefix, "output prefix for .json and .csv");
  app.add_flag("--list-presets", list, "list presets and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (list) {
    for (const PresetInfo& p : list_presets())
      out << p.name << '\t' << p.description << '\n';
    return 0;
  }

  RunConfig cfg;
  try {
    if (!config.empty()) cfg = load_config_file(cfg, config);
    if (app.count("command")) cfg.command = command;
    if (app.count("--preset")) cfg.preset = preset;
    if (app.count("--grid")) cfg.grid = parse_grid(grid);
    if (app.count("--h")) cfg.h = h;
    if (app.count("--tol-slope")) cfg.tol_slope = tol;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--n")) cfg.n = n;
    if (app.count("--k")) cfg.k = k;
    if (app.count("--s")) cfg.s = s;
    if (app.count("--t")) cfg.t = t;
    if (app.count("--samples")) cfg.samples = samples;
    if (app.count("--out")) cfg.out = out_prefix;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  RunResult r = run(cfg);
  if (r.exit_code == 1) {
    err << "error: " << r.report.value("error", std::string("unknown")) << '\n';
    return 1;
  }
  const std::string prefix = cfg.out.empty() ? "qdiv-" + cfg.command : cfg.out;
  std::ofstream js(prefix + ".json"), cs(prefix + ".csv");
  if (!js || !cs) {
    err << "error: cannot write " << prefix << ".json/.csv\n";
    return 1;
  }
  js << r.report.dump(2) << '\n';
  cs << r.csv;
  out << r.report.value("verdict", std::string()) << ' ' << prefix << ".json "
      << prefix << ".csv\n";
  return r.exit_code;
}

}  // namespace qdiv
