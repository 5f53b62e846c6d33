// dptlab — command-line front end: configures runs, dispatches to the
// engines and emits CSV/JSON artifacts suitable for scripted figure
// regeneration. All rates are entered in units of gamma and times in
// 1/gamma; --gamma only re-dimensionalizes the outputs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpt/critical_analysis.hpp"
#include "dpt/io.hpp"
#include "dpt/lindblad_engine.hpp"
#include "dpt/mean_field.hpp"
#include "dpt/stationary_theory.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 2 invalid config, 3 convergence failure,
// 4 truncation inadequate, 5 internal consistency error.
enum ExitCode {
  kOk = 0,
  kInvalidConfig = 2,
  kNotConverged = 3,
  kTruncation = 4,
  kInternal = 5,
};

int emit_error(const std::string& type, int code, const std::string& message) {
  json j{{"error", {{"type", type}, {"exit_code", code}, {"message", message}}}};
  std::cerr << j.dump() << std::endl;
  return code;
}

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return kOk;
  } catch (const dpt::InvalidParameterError& e) {
    return emit_error("invalid_config", kInvalidConfig, e.what());
  } catch (const dpt::InvalidCutoffError& e) {
    return emit_error("invalid_config", kInvalidConfig, e.what());
  } catch (const dpt::DegenerateModelError& e) {
    return emit_error("invalid_config", kInvalidConfig, e.what());
  } catch (const dpt::ShapeError& e) {
    return emit_error("invalid_config", kInvalidConfig, e.what());
  } catch (const dpt::NotConvergedError& e) {
    return emit_error("not_converged", kNotConverged, e.what());
  } catch (const dpt::NoThresholdError& e) {
    return emit_error("no_threshold_found", kNotConverged, e.what());
  } catch (const dpt::TruncationError& e) {
    return emit_error("truncation_inadequate", kTruncation,
                      std::string(e.what()) + " (advised cutoff: " +
                          std::to_string(e.advised_cutoff) + ")");
  } catch (const dpt::IntegrationError& e) {
    return emit_error("integration_failure", kInternal, e.what());
  } catch (const dpt::SolverError& e) {
    return emit_error("solver_failure", kInternal, e.what());
  } catch (const dpt::InternalConsistencyError& e) {
    return emit_error("internal_consistency", kInternal, e.what());
  } catch (const json::exception& e) {
    return emit_error("invalid_config", kInvalidConfig, e.what());
  } catch (const std::exception& e) {
    return emit_error("internal_error", kInternal, e.what());
  }
}

// "start:stop:step" inclusive of both endpoints within half a step; a bare
// number is a single-point range.
std::vector<double> parse_range(const std::string& spec, const char* name) {
  std::vector<double> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t next = spec.find(':', pos);
    const std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw dpt::InvalidParameterError(std::string(name) + ": cannot parse '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) {
    throw dpt::InvalidParameterError(std::string(name) +
                                     ": expected 'start:stop:step' or a single value");
  }
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || stop < start) {
    throw dpt::InvalidParameterError(std::string(name) + ": need step > 0 and stop >= start");
  }
  std::vector<double> values;
  for (int k = 0;; ++k) {
    const double v = start + k * step;
    if (v > stop + 0.5 * step) break;
    values.push_back(v);
  }
  return values;
}

std::pair<double, double> parse_window(const std::string& spec, const char* name) {
  const auto sep = spec.find(':');
  if (sep == std::string::npos) {
    throw dpt::InvalidParameterError(std::string(name) + ": expected 'lo:hi'");
  }
  const auto vals = parse_range(spec.substr(0, sep) + ":" + spec.substr(sep + 1) + ":1",
                                name);
  return {vals.front(), vals.back()};
}

dpt::Backend parse_backend(const std::string& s) {
  if (s == "meanfield") return dpt::Backend::meanfield;
  if (s == "master") return dpt::Backend::master;
  throw dpt::InvalidParameterError("backend must be 'meanfield' or 'master', got '" + s + "'");
}

int env_workers() {
  const char* v = std::getenv("DPTLAB_WORKERS");
  if (!v) return 0;
  try {
    return std::max(0, std::stoi(v));
  } catch (const std::exception&) {
    return 0;
  }
}

std::string out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

// ---------------------------------------------------------------------------
// Subcommand configs. Every field lands in the manifest; `rerun` feeds the
// manifest back through the same structs.

struct EvolveCfg {
  double g = 20.0;
  double delta = 0.0;
  std::string backends = "master,meanfield";
  int cutoff = 0;  // 0: auto
  int samples = 400;
  double t_max = 2.0;
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double truncation_tol = 1e-8;
  int workers = 0;
  double gamma = 1.0;
  std::string out_dir = ".";
  std::string prefix = "evolve";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(EvolveCfg, g, delta, backends, cutoff,
                                                samples, t_max, rel_tol, abs_tol,
                                                truncation_tol, workers, gamma, out_dir,
                                                prefix)

struct SteadyCfg {
  double g = 20.0;
  double delta = 0.0;
  std::string method = "auto";  // auto | evolve | direct
  int cutoff = 0;
  double residual_tol = 1e-9;
  double t_cap = 400.0;
  int workers = 0;
  double gamma = 1.0;
  std::string out_dir = ".";
  std::string prefix = "steady";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SteadyCfg, g, delta, method, cutoff,
                                                residual_tol, t_cap, workers, gamma,
                                                out_dir, prefix)

struct GridCfg {
  std::string backend = "meanfield";
  std::string delta_range = "0:2:0.05";
  std::string g_range = "0.5:3:0.05";
  int workers = 0;
  double exceedance = 0.0;  // threshold only; 0: one delta spacing
  double gamma = 1.0;
  std::string out_dir = ".";
  std::string prefix = "grid";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GridCfg, backend, delta_range, g_range,
                                                workers, exceedance, gamma, out_dir,
                                                prefix)

struct ExponentCfg {
  std::string backend = "meanfield";
  std::string window = "20:200";
  int points = 12;
  int workers = 0;
  double gamma = 1.0;
  std::string out_dir = ".";
  std::string prefix = "exponent";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ExponentCfg, backend, window, points,
                                                workers, gamma, out_dir, prefix)

struct CurvatureCfg {
  std::string backend = "meanfield";
  std::string g_range = "0.05:20:0.05";
  double stencil = 0.0;  // 0: backend default
  int workers = 0;
  double gamma = 1.0;
  std::string out_dir = ".";
  std::string prefix = "curvature";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CurvatureCfg, backend, g_range, stencil,
                                                workers, gamma, out_dir, prefix)

void write_manifest(const std::string& dir, const std::string& prefix,
                    const std::string& subcommand, const json& config,
                    const std::vector<std::string>& outputs, const json& results) {
  json manifest{{"schema_version", dpt::kSchemaVersion},
                {"subcommand", subcommand},
                {"config", config},
                {"outputs", outputs},
                {"results", results}};
  dpt::write_json(out_path(dir, prefix + "_manifest.json"), manifest);
}

// ---------------------------------------------------------------------------

void run_evolve(const EvolveCfg& cfg) {
  if (!(cfg.t_max > 0.0)) throw dpt::InvalidParameterError("t_max must be > 0");
  if (cfg.samples < 2) throw dpt::InvalidParameterError("samples must be >= 2");
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const dpt::EffectiveParams params(cfg.g, 1.0, cfg.delta);

  std::vector<std::string> outputs;
  json results;
  std::stringstream backends(cfg.backends);
  std::string backend;
  bool any = false;
  while (std::getline(backends, backend, ',')) {
    if (backend == "master") {
      const int cutoff = cfg.cutoff > 0 ? cfg.cutoff : dpt::suggest_cutoff(params);
      dpt::EvolveConfig ec;
      ec.t_max = cfg.t_max;
      ec.rel_tol = cfg.rel_tol;
      ec.abs_tol = cfg.abs_tol;
      ec.samples = cfg.samples;
      ec.truncation_tol = cfg.truncation_tol;
      const auto traj = dpt::evolve(dpt::vacuum_state(cutoff), params, ec);
      const auto path = out_path(cfg.out_dir, cfg.prefix + "_master.csv");
      dpt::write_trajectory_csv(path, dpt::trajectory_rows(traj), cfg.gamma);
      outputs.push_back(path);
      results["master"] = dpt::to_json(traj);
    } else if (backend == "meanfield") {
      dpt::MfConfig mc;
      mc.t_max = cfg.t_max;
      mc.samples = cfg.samples;
      mc.rel_tol = cfg.rel_tol;
      mc.abs_tol = cfg.abs_tol;
      const auto traj = dpt::evolve_green(dpt::GreenPair{}, params, mc);
      const auto path = out_path(cfg.out_dir, cfg.prefix + "_meanfield.csv");
      dpt::write_trajectory_csv(path, dpt::trajectory_rows(traj), cfg.gamma);
      outputs.push_back(path);
      results["meanfield"] = dpt::to_json(traj);
    } else {
      throw dpt::InvalidParameterError("unknown backend '" + backend + "'");
    }
    any = true;
  }
  if (!any) throw dpt::InvalidParameterError("no backends requested");
  write_manifest(cfg.out_dir, cfg.prefix, "evolve", cfg, outputs, results);
}

void run_steady(const SteadyCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const dpt::EffectiveParams params(cfg.g, 1.0, cfg.delta);
  dpt::SteadyReport report;
  if (cfg.method == "auto") {
    dpt::AutoSteadyConfig ac;
    ac.steady.residual_tol = cfg.residual_tol;
    ac.steady.t_cap = cfg.t_cap;
    ac.cutoff = cfg.cutoff;
    report = dpt::steady_state_auto(params, ac);
  } else if (cfg.method == "evolve") {
    const int cutoff = cfg.cutoff > 0 ? cfg.cutoff : dpt::suggest_cutoff(params);
    dpt::SteadyConfig sc;
    sc.residual_tol = cfg.residual_tol;
    sc.t_cap = cfg.t_cap;
    report = dpt::steady_state_evolve(params, cutoff, sc);
  } else if (cfg.method == "direct") {
    const int cutoff = cfg.cutoff > 0 ? cfg.cutoff : dpt::suggest_cutoff(params);
    report = dpt::steady_state_direct(params, cutoff);
  } else {
    throw dpt::InvalidParameterError("method must be auto, evolve or direct");
  }
  const auto csv = out_path(cfg.out_dir, cfg.prefix + "_steady.csv");
  dpt::write_steady_csv(csv, report, cfg.gamma);
  write_manifest(cfg.out_dir, cfg.prefix, "steady", cfg, {csv}, dpt::to_json(report));
}

dpt::SweepGrid sweep_from(const GridCfg& cfg) {
  dpt::SweepOptions opts;
  opts.workers = cfg.workers;
  return dpt::sweep(parse_backend(cfg.backend),
                    parse_range(cfg.delta_range, "delta-range"),
                    parse_range(cfg.g_range, "g-range"), opts);
}

void run_sweep(const GridCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const auto grid = sweep_from(cfg);
  const auto csv = out_path(cfg.out_dir, cfg.prefix + "_sweep.csv");
  dpt::write_sweep_csv(csv, grid, cfg.gamma);
  int failed = 0;
  for (const auto& p : grid.points) failed += p.converged ? 0 : 1;
  write_manifest(cfg.out_dir, cfg.prefix, "sweep", cfg, {csv},
                 {{"points", grid.points.size()}, {"failed_points", failed}});
}

void run_susceptibility(const GridCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const auto grid = sweep_from(cfg);
  const auto map = dpt::susceptibility(grid);
  const auto sweep_csv = out_path(cfg.out_dir, cfg.prefix + "_sweep.csv");
  const auto chi_csv = out_path(cfg.out_dir, cfg.prefix + "_susceptibility.csv");
  dpt::write_sweep_csv(sweep_csv, grid, cfg.gamma);
  dpt::write_susceptibility_csv(chi_csv, map, cfg.gamma);
  write_manifest(cfg.out_dir, cfg.prefix, "susceptibility", cfg, {sweep_csv, chi_csv},
                 dpt::to_json(map));
}

void run_threshold(const GridCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const auto grid = sweep_from(cfg);
  const auto map = dpt::susceptibility(grid);
  const auto est = cfg.exceedance > 0.0 ? dpt::find_threshold(map, cfg.exceedance)
                                        : dpt::find_threshold(map);
  const auto chi_csv = out_path(cfg.out_dir, cfg.prefix + "_susceptibility.csv");
  dpt::write_susceptibility_csv(chi_csv, map, cfg.gamma);
  json results = dpt::to_json(est);
  results["g_th_dimensional"] = est.g_th * cfg.gamma;
  results["ridge"] = dpt::to_json(map)["ridge"];
  write_manifest(cfg.out_dir, cfg.prefix, "threshold", cfg, {chi_csv}, results);
}

void run_exponent(const ExponentCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  const auto [lo, hi] = parse_window(cfg.window, "window");
  dpt::SweepOptions opts;
  opts.workers = cfg.workers;
  const auto fit = dpt::fit_exponent(parse_backend(cfg.backend), lo, hi, cfg.points, opts);
  const auto csv = out_path(cfg.out_dir, cfg.prefix + "_fit.csv");
  dpt::write_fit_csv(csv, fit);
  write_manifest(cfg.out_dir, cfg.prefix, "exponent", cfg, {csv}, dpt::to_json(fit));
}

void run_curvature(const CurvatureCfg& cfg) {
  if (!(cfg.gamma > 0.0)) throw dpt::InvalidParameterError("gamma must be > 0");
  dpt::CurvatureOptions opts;
  opts.stencil = cfg.stencil;
  opts.solver.workers = cfg.workers;
  const auto scan = dpt::curvature_scan(parse_backend(cfg.backend),
                                        parse_range(cfg.g_range, "g-range"), opts);
  const auto path = out_path(cfg.out_dir, cfg.prefix + "_curvature.csv");
  std::ofstream out(path);
  if (!out) throw dpt::Error("cannot open output file: " + path);
  out << "g,curvature,stencil_warning\n";
  for (const auto& p : scan.points) {
    out << dpt::format_double(p.g * cfg.gamma) << ','
        << dpt::format_double(p.curvature / cfg.gamma) << ','
        << (p.stencil_warning ? 1 : 0) << '\n';
  }
  write_manifest(cfg.out_dir, cfg.prefix, "curvature", cfg, {path}, dpt::to_json(scan));
}

void run_rerun(const std::string& manifest_path, const std::string& out_dir_override) {
  std::ifstream in(manifest_path);
  if (!in) throw dpt::InvalidParameterError("cannot open manifest: " + manifest_path);
  json manifest = json::parse(in);
  const std::string sub = manifest.at("subcommand").get<std::string>();
  json config = manifest.at("config");
  if (!out_dir_override.empty()) config["out_dir"] = out_dir_override;
  if (sub == "evolve") {
    run_evolve(config.get<EvolveCfg>());
  } else if (sub == "steady") {
    run_steady(config.get<SteadyCfg>());
  } else if (sub == "sweep") {
    run_sweep(config.get<GridCfg>());
  } else if (sub == "susceptibility") {
    run_susceptibility(config.get<GridCfg>());
  } else if (sub == "threshold") {
    run_threshold(config.get<GridCfg>());
  } else if (sub == "exponent") {
    run_exponent(config.get<ExponentCfg>());
  } else if (sub == "curvature") {
    run_curvature(config.get<CurvatureCfg>());
  } else {
    throw dpt::InvalidParameterError("manifest has unknown subcommand '" + sub + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon driven-dissipative phase transition laboratory"};
  app.require_subcommand(1);
  const int workers_default = env_workers();
  int exit_code = kOk;

  EvolveCfg evolve_cfg;
  evolve_cfg.workers = workers_default;
  auto* evolve = app.add_subcommand("evolve", "time-evolve from vacuum, write trajectories");
  evolve->add_option("--g", evolve_cfg.g, "pump rate g (gamma units)");
  evolve->add_option("--delta", evolve_cfg.delta, "detuning (gamma units)");
  evolve->add_option("--backends", evolve_cfg.backends, "comma list: master,meanfield");
  evolve->add_option("--cutoff", evolve_cfg.cutoff, "Fock cutoff (0 = auto)");
  evolve->add_option("--samples", evolve_cfg.samples, "recorded samples");
  evolve->add_option("--t-max", evolve_cfg.t_max, "horizon (1/gamma units)");
  evolve->add_option("--rel-tol", evolve_cfg.rel_tol, "integrator relative tolerance");
  evolve->add_option("--abs-tol", evolve_cfg.abs_tol, "integrator absolute tolerance");
  evolve->add_option("--truncation-tol", evolve_cfg.truncation_tol, "edge-weight tolerance");
  evolve->add_option("--gamma", evolve_cfg.gamma, "re-dimensionalize outputs");
  evolve->add_option("--out-dir", evolve_cfg.out_dir, "output directory");
  evolve->add_option("--prefix", evolve_cfg.prefix, "output file prefix");
  evolve->callback([&] { exit_code = run_guarded([&] { run_evolve(evolve_cfg); }); });

  SteadyCfg steady_cfg;
  auto* steady = app.add_subcommand("steady", "steady state of the master equation");
  steady->add_option("--g", steady_cfg.g, "pump rate g (gamma units)");
  steady->add_option("--delta", steady_cfg.delta, "detuning (gamma units)");
  steady->add_option("--method", steady_cfg.method, "auto | evolve | direct");
  steady->add_option("--cutoff", steady_cfg.cutoff, "Fock cutoff (0 = auto)");
  steady->add_option("--residual-tol", steady_cfg.residual_tol, "generator residual tolerance");
  steady->add_option("--t-cap", steady_cfg.t_cap, "evolve-method time cap");
  steady->add_option("--gamma", steady_cfg.gamma, "re-dimensionalize outputs");
  steady->add_option("--out-dir", steady_cfg.out_dir, "output directory");
  steady->add_option("--prefix", steady_cfg.prefix, "output file prefix");
  steady->callback([&] { exit_code = run_guarded([&] { run_steady(steady_cfg); }); });

  const auto add_grid_options = [&](CLI::App* cmd, GridCfg& cfg, bool with_exceedance) {
    cfg.workers = workers_default;
    cmd->add_option("--backend", cfg.backend, "meanfield | master");
    cmd->add_option("--delta-range", cfg.delta_range, "start:stop:step or single value");
    cmd->add_option("--g-range", cfg.g_range, "start:stop:step or single value");
    cmd->add_option("--g", cfg.g_range, "alias for a single-g sweep");
    cmd->add_option("--delta", cfg.delta_range, "alias for a single-delta sweep");
    cmd->add_option("--workers", cfg.workers, "worker threads (env DPTLAB_WORKERS)");
    if (with_exceedance) {
      cmd->add_option("--exceedance", cfg.exceedance,
                      "ridge departure height (0 = one delta spacing)");
    }
    cmd->add_option("--gamma", cfg.gamma, "re-dimensionalize outputs");
    cmd->add_option("--out-dir", cfg.out_dir, "output directory");
    cmd->add_option("--prefix", cfg.prefix, "output file prefix");
  };

  GridCfg sweep_cfg;
  sweep_cfg.prefix = "sweep";
  auto* sweep_cmd = app.add_subcommand("sweep", "steady |psi| and n over a (delta, g) grid");
  add_grid_options(sweep_cmd, sweep_cfg, false);
  sweep_cmd->callback([&] { exit_code = run_guarded([&] { run_sweep(sweep_cfg); }); });

  GridCfg susc_cfg;
  susc_cfg.prefix = "susceptibility";
  auto* susc = app.add_subcommand("susceptibility", "chi = d|psi|/dg map with ridge");
  add_grid_options(susc, susc_cfg, false);
  susc->callback([&] { exit_code = run_guarded([&] { run_susceptibility(susc_cfg); }); });

  GridCfg thr_cfg;
  thr_cfg.prefix = "threshold";
  auto* thr = app.add_subcommand("threshold", "pump threshold from the ridge departure");
  add_grid_options(thr, thr_cfg, true);
  thr->callback([&] { exit_code = run_guarded([&] { run_threshold(thr_cfg); }); });

  ExponentCfg exp_cfg;
  exp_cfg.workers = workers_default;
  auto* expc = app.add_subcommand("exponent", "critical exponent fit along delta = g");
  expc->add_option("--backend", exp_cfg.backend, "meanfield | master");
  expc->add_option("--window", exp_cfg.window, "fit window lo:hi (gamma units)");
  expc->add_option("--points", exp_cfg.points, "log-spaced sample count (>= 5)");
  expc->add_option("--workers", exp_cfg.workers, "worker threads");
  expc->add_option("--gamma", exp_cfg.gamma, "re-dimensionalize outputs");
  expc->add_option("--out-dir", exp_cfg.out_dir, "output directory");
  expc->add_option("--prefix", exp_cfg.prefix, "output file prefix");
  expc->callback([&] { exit_code = run_guarded([&] { run_exponent(exp_cfg); }); });

  CurvatureCfg curv_cfg;
  curv_cfg.workers = workers_default;
  auto* curv = app.add_subcommand("curvature", "d^2|psi|/d delta^2 at delta = 0 vs g");
  curv->add_option("--backend", curv_cfg.backend, "meanfield | master");
  curv->add_option("--g-range", curv_cfg.g_range, "start:stop:step or single value");
  curv->add_option("--stencil", curv_cfg.stencil, "finite-difference step (0 = default)");
  curv->add_option("--workers", curv_cfg.workers, "worker threads");
  curv->add_option("--gamma", curv_cfg.gamma, "re-dimensionalize outputs");
  curv->add_option("--out-dir", curv_cfg.out_dir, "output directory");
  curv->add_option("--prefix", curv_cfg.prefix, "output file prefix");
  curv->callback([&] { exit_code = run_guarded([&] { run_curvature(curv_cfg); }); });

  std::string manifest_path;
  std::string rerun_out_dir;
  auto* rerun = app.add_subcommand("rerun", "reproduce a run from its JSON manifest");
  rerun->add_option("manifest", manifest_path, "path to a *_manifest.json")->required();
  rerun->add_option("--out-dir", rerun_out_dir, "redirect outputs");
  rerun->callback(
      [&] { exit_code = run_guarded([&] { run_rerun(manifest_path, rerun_out_dir); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("invalid_config", kInvalidConfig, e.what());
    return kInvalidConfig;
  }
  return exit_code;
}
