#include "dpt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace dpt {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open output file: " + path);
  }
  return out;
}

void write_row(std::ofstream& out, const std::vector<double>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << format_double(fields[i]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<TrajectoryRow> trajectory_rows(const Trajectory& traj) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Observables& o = traj.values[i];
    rows.push_back({traj.times[i], o.psi, o.n, o.trace, o.purity, o.edge_weight});
  }
  return rows;
}

std::vector<TrajectoryRow> trajectory_rows(const GreenTrajectory& traj) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    const double inv = s.state.g_fn * s.state.g_fn - std::norm(s.state.f_fn);
    rows.push_back({s.t, 0.5 * s.state.f_fn, 0.5 * (s.state.g_fn - 1.0), 1.0,
                    inv > 0.0 ? 1.0 / std::sqrt(inv) : 0.0, 0.0});
  }
  return rows;
}

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows,
                          double gamma) {
  auto out = open_out(path);
  out << "t,re_psi,im_psi,abs_psi,n,trace,purity,edge_weight\n";
  for (const auto& r : rows) {
    write_row(out, {r.t / gamma, r.psi.real(), r.psi.imag(), std::abs(r.psi), r.n,
                    r.trace, r.purity, r.edge_weight});
  }
}

void write_sweep_csv(const std::string& path, const SweepGrid& grid, double gamma) {
  auto out = open_out(path);
  out << "delta,g,abs_psi,n,converged,cutoff\n";
  for (std::size_t i = 0; i < grid.delta_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.g_axis.size(); ++j) {
      const auto& p = grid.at(i, j);
      out << format_double(grid.delta_axis[i] * gamma) << ','
          << format_double(grid.g_axis[j] * gamma) << ','
          << format_double(p.abs_psi) << ',' << format_double(p.n) << ','
          << (p.converged ? 1 : 0) << ',' << p.cutoff << '\n';
    }
  }
}

void write_susceptibility_csv(const std::string& path, const SusceptibilityMap& map,
                              double gamma) {
  auto out = open_out(path);
  out << "delta,g,chi,chi_norm\n";
  const std::size_t ng = map.g_axis.size();
  for (std::size_t i = 0; i < map.delta_axis.size(); ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      write_row(out, {map.delta_axis[i] * gamma, map.g_axis[j] * gamma,
                      map.chi[i * ng + j] / gamma, map.chi_norm[i * ng + j]});
    }
  }
}

void write_fit_csv(const std::string& path, const PowerLawFit& fit) {
  auto out = open_out(path);
  out << "log_g,log_psi\n";
  for (const auto& p : fit.points) {
    write_row(out, {p[0], p[1]});
  }
}

void write_steady_csv(const std::string& path, const SteadyReport& report, double gamma) {
  auto out = open_out(path);
  out << "t,re_psi,im_psi,abs_psi,n,trace,purity,edge_weight\n";
  const Observables& o = report.obs;
  write_row(out, {report.t_reached / gamma, o.psi.real(), o.psi.imag(),
                  std::abs(o.psi), o.n, o.trace, o.purity, o.edge_weight});
}

nlohmann::json to_json(const Observables& obs) {
  return {{"n", obs.n},
          {"re_psi", obs.psi.real()},
          {"im_psi", obs.psi.imag()},
          {"abs_psi", std::abs(obs.psi)},
          {"trace", obs.trace},
          {"purity", obs.purity},
          {"edge_weight", obs.edge_weight}};
}

nlohmann::json to_json(const Rk45Stats& stats) {
  return {{"steps", stats.steps}, {"rejected", stats.rejected}, {"dt_last", stats.dt_last}};
}

nlohmann::json to_json(const ConservationStats& stats) {
  return {{"max_trace_drift", stats.max_trace_drift},
          {"max_herm_dev", stats.max_herm_dev},
          {"max_odd_leakage", stats.max_odd_leakage}};
}

nlohmann::json to_json(const SteadyReport& report) {
  return {{"method", report.method == SteadyMethod::evolve ? "evolve" : "direct"},
          {"observables", to_json(report.obs)},
          {"residual", report.residual},
          {"truncation_ok", report.truncation_ok},
          {"edge_weight", report.edge_weight},
          {"cutoff", report.state.dim},
          {"t_reached", report.t_reached},
          {"integrator", to_json(report.stats)},
          {"conservation", to_json(report.conservation)}};
}

nlohmann::json to_json(const Trajectory& traj) {
  return {{"source", "master"},
          {"cutoff", traj.cutoff},
          {"samples", traj.times.size()},
          {"final_residual", traj.final_residual},
          {"integrator", to_json(traj.stats)},
          {"conservation", to_json(traj.conservation)}};
}

nlohmann::json to_json(const GreenTrajectory& traj) {
  return {{"source", "meanfield"},
          {"samples", traj.samples.size()},
          {"channel", traj.channel == DecouplingChannel::cooper ? "cooper" : "cooper_plus_density"},
          {"max_invariant_drift", traj.max_invariant_drift},
          {"integrator", to_json(traj.stats)}};
}

nlohmann::json to_json(const SusceptibilityMap& map) {
  nlohmann::json ridge = nlohmann::json::array();
  for (std::size_t j = 0; j < map.g_axis.size(); ++j) {
    if (!std::isnan(map.ridge[j])) {
      ridge.push_back({map.g_axis[j], map.ridge[j]});
    }
  }
  return {{"delta_spacing", map.delta_spacing},
          {"g_spacing", map.g_spacing},
          {"ridge", ridge}};
}

nlohmann::json to_json(const ThresholdEstimate& est) {
  return {{"g_th", est.g_th}, {"error_bar", est.error_bar}, {"exceedance", est.exceedance}};
}

nlohmann::json to_json(const PowerLawFit& fit) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"slope_stderr", fit.slope_stderr},
          {"delta_exponent", fit.delta_exponent},
          {"delta_stderr", fit.delta_stderr},
          {"r_squared", fit.r_squared},
          {"window", {fit.window_lo, fit.window_hi}},
          {"points", fit.points.size()},
          {"poor_fit_warning", fit.poor_fit},
          {"sensitivity", {fit.sensitivity_lo, fit.sensitivity_hi}}};
}

nlohmann::json to_json(const CurvatureScan& scan) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : scan.points) {
    points.push_back({{"g", p.g}, {"curvature", p.curvature}, {"stencil_warning", p.stencil_warning}});
  }
  return {{"backend", scan.backend == Backend::meanfield ? "meanfield" : "master"},
          {"stencil", scan.stencil},
          {"points", points}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace dpt
