// io.hpp — CSV and JSON serialization of trajectories, steady reports and
// analysis products. Doubles are printed with 17 significant digits; the
// values are reproducible bit-for-bit from an identical configuration, but
// bit-exact files are not an interface guarantee.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dpt/critical_analysis.hpp"
#include "dpt/lindblad_engine.hpp"
#include "dpt/mean_field.hpp"

namespace dpt {

inline constexpr const char* kSchemaVersion = "1.0";

std::string format_double(double v);  // %.17g, locale-independent

// Common trajectory row: t, re_psi, im_psi, abs_psi, n, trace, purity,
// edge_weight.
struct TrajectoryRow {
  double t;
  Complex psi;
  double n;
  double trace;
  double purity;
  double edge_weight;
};

std::vector<TrajectoryRow> trajectory_rows(const Trajectory& traj);
// Mean-field rows: psi = F/2, n = (G-1)/2, trace = 1 by construction,
// purity = 1/sqrt(G^2 - |F|^2) (unit on the conserved manifold), no
// truncation edge.
std::vector<TrajectoryRow> trajectory_rows(const GreenTrajectory& traj);

// time_scale divides the t column (re-dimensionalization hook; 1 = gamma units).
void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows,
                          double gamma = 1.0);

// Long format: delta, g, abs_psi, n, converged, cutoff.
void write_sweep_csv(const std::string& path, const SweepGrid& grid, double gamma = 1.0);

// Long format: delta, g, chi, chi_norm.
void write_susceptibility_csv(const std::string& path, const SusceptibilityMap& map,
                              double gamma = 1.0);

// log_g, log_psi sample pairs (always in gamma units).
void write_fit_csv(const std::string& path, const PowerLawFit& fit);

// One-row trajectory schema at the time the steady state was declared.
void write_steady_csv(const std::string& path, const SteadyReport& report,
                      double gamma = 1.0);

// JSON building blocks for manifests.
nlohmann::json to_json(const Observables& obs);
nlohmann::json to_json(const Rk45Stats& stats);
nlohmann::json to_json(const ConservationStats& stats);
nlohmann::json to_json(const SteadyReport& report);
nlohmann::json to_json(const Trajectory& traj);
nlohmann::json to_json(const GreenTrajectory& traj);
nlohmann::json to_json(const SusceptibilityMap& map);  // ridge polyline + spacings
nlohmann::json to_json(const ThresholdEstimate& est);
nlohmann::json to_json(const PowerLawFit& fit);
nlohmann::json to_json(const CurvatureScan& scan);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace dpt
