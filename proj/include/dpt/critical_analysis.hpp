// critical_analysis.hpp — parameter sweeps over (delta, g), susceptibility
// maps with ridge extraction, threshold detection, curvature scans and
// critical-exponent fits, against the mean-field and exact master-equation
// backends. All rates are in gamma units (gamma = 1 internally).
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dpt/lindblad_engine.hpp"
#include "dpt/mean_field.hpp"

namespace dpt {

enum class Backend { meanfield, master };

struct SweepOptions {
  int workers = 0;  // 0: hardware concurrency
  AutoSteadyConfig master;
  MfConfig meanfield;
};

struct SweepPoint {
  double abs_psi = 0.0;
  double n = 0.0;
  bool converged = false;
  int cutoff = 0;  // master backend; 0 for mean-field
};

struct SweepGrid {
  std::vector<double> delta_axis;
  std::vector<double> g_axis;
  Backend backend = Backend::meanfield;
  // delta-major layout: points[i_delta * g_axis.size() + j_g]
  std::vector<SweepPoint> points;

  const SweepPoint& at(std::size_t i_delta, std::size_t j_g) const {
    return points[i_delta * g_axis.size() + j_g];
  }
};

// Fills the grid point by point; points are independent work items
// processed by a fixed-width worker pool. Per-point convergence failures
// are recorded in the flags, never silently interpolated; a sweep where
// every point failed throws.
SweepGrid sweep(Backend backend, std::vector<double> delta_axis,
                std::vector<double> g_axis, const SweepOptions& options = {});

struct SusceptibilityMap {
  std::vector<double> delta_axis;
  std::vector<double> g_axis;
  // chi = d|psi|/dg by central differences (one-sided at the g edges),
  // delta-major layout as in SweepGrid. chi_norm divides each fixed-delta
  // row by its own maximum; finite-difference noise below zero is clamped
  // so chi_norm stays in [0, 1].
  std::vector<double> chi;
  std::vector<double> chi_norm;
  std::vector<std::uint8_t> valid;  // 0 where a stencil cell failed
  // Ridge delta_max(g): argmax of chi over delta per g column, refined by
  // a 3-point parabola; ties broken toward delta = 0; NaN where the column
  // has no valid cells.
  std::vector<double> ridge;
  double delta_spacing = 0.0;
  double g_spacing = 0.0;
};

// Requires >= 3 g points and uniform axes.
SusceptibilityMap susceptibility(const SweepGrid& grid);

struct ThresholdEstimate {
  double g_th;
  double error_bar;    // one g-grid spacing
  double exceedance;   // ridge height that defines departure
};

// Smallest g where the ridge exceeds `exceedance` above zero (default: one
// delta-grid spacing), refined by bisection on the piecewise-linear ridge
// interpolant. Throws NoThresholdError when the ridge never departs or the
// departure is not bracketed by the scanned range.
ThresholdEstimate find_threshold(const SusceptibilityMap& map);
ThresholdEstimate find_threshold(const SusceptibilityMap& map, double exceedance);

struct CurvatureOptions {
  double stencil = 0.0;  // 0: backend default (1e-4 mean-field, 1e-2 master)
  SweepOptions solver;
};

struct CurvaturePoint {
  double g;
  double curvature;       // d^2|psi|/d delta^2 at delta = 0
  bool stencil_warning;   // halving the stencil moved the value by > 1%
};

struct CurvatureScan {
  std::vector<CurvaturePoint> points;
  double stencil;
  Backend backend;
};

// 3-point second difference of |psi|(delta) at delta = 0 for each g. The
// mean-field backend evaluates the closed-form stationary solution (the
// steady-ODE values agree with it to ~1e-9, which finite differencing at
// stencil^2 would amplify); the master backend re-solves the steady state
// at each stencil point.
CurvatureScan curvature_scan(Backend backend, const std::vector<double>& g_axis,
                             const CurvatureOptions& options = {});

struct PowerLawFit {
  std::vector<std::array<double, 2>> points;  // (log g, log |psi|)
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double delta_exponent = 0.0;  // 1 / slope
  double delta_stderr = 0.0;
  double r_squared = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  bool poor_fit = false;  // r^2 < 0.99
  // Exponent when the first / last sample is dropped; the paper does not
  // state its fit window, so the sensitivity always travels with the fit.
  double sensitivity_lo = 0.0;
  double sensitivity_hi = 0.0;
};

// Least-squares line through log|psi| vs log g along the critical line
// delta = g, sampled at n_points log-spaced pump rates in [g_lo, g_hi].
// Windows with fewer than 5 points are refused.
PowerLawFit fit_exponent(Backend backend, double g_lo, double g_hi, int n_points,
                         const SweepOptions& options = {});

}  // namespace dpt
