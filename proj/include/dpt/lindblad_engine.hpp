// lindblad_engine.hpp — exact dynamics of the master equation on a
// truncated Fock basis: time evolution from the vacuum, steady-state
// detection by generator residual, a direct linear-algebra steady solve on
// the even-parity block, and observable extraction with truncation and
// positivity diagnostics.
#pragma once

#include <vector>

#include "dpt/fock_ops.hpp"
#include "dpt/rk45.hpp"

namespace dpt {

struct DensityMatrix {
  int dim = 0;
  Matrix entries;
};

DensityMatrix vacuum_state(int cutoff);

// Throws InternalConsistencyError when rho is not Hermitian (1e-10
// relative), unit trace (1e-8), or has a diagonal entry below -1e-10.
// With full_check the smallest eigenvalue is also required >= -1e-8.
void validate_density(const DensityMatrix& rho, bool full_check = false);

struct Observables {
  double n = 0.0;            // Tr[a^+a rho]
  Complex psi = {0.0, 0.0};  // Tr[a^2 rho]
  double trace = 0.0;
  double purity = 0.0;       // Tr[rho^2]
  double edge_weight = 0.0;  // population on the top 3 Fock levels
};

Observables observables(const DensityMatrix& rho);

struct TruncationReport {
  double edge_weight;
  double tol;
  int top_levels;
  bool adequate;
};

// Sums the populations of the top `top_levels` Fock levels; adequate iff
// the sum stays below tol.
TruncationReport check_truncation(const DensityMatrix& rho, int top_levels = 3,
                                  double tol = 1e-8);

// Drift maxima accumulated over the recorded states of one evolution.
struct ConservationStats {
  double max_trace_drift = 0.0;   // max |Tr rho - 1|
  double max_herm_dev = 0.0;      // max ||rho - rho^+||_max
  double max_odd_leakage = 0.0;   // max total odd-parity population (vacuum start)
};

struct EvolveConfig {
  double t_max = 2.0;      // 1/gamma units
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;  // see README: tighter than the diagonal floor
  int samples = 400;       // evenly spaced recorded samples, including t = 0
  bool validate_recorded = true;
  bool full_positivity_check = false;  // eigenvalue check per recorded state
  double truncation_tol = 1e-8;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Observables> values;
  EffectiveParams params;
  int cutoff = 0;
  Rk45Stats stats;
  ConservationStats conservation;
  double final_residual = 0.0;  // ||L(rho)||_1 / ||rho||_1 at t_max
};

// Integrates the master equation with the adaptive RK45 pair. Recorded
// states are validated against the DensityMatrix invariants; a violation
// raises IntegrationError with the failing time, and an inadequate cutoff
// raises TruncationError.
Trajectory evolve(const DensityMatrix& rho0, const EffectiveParams& params,
                  const EvolveConfig& config = {});

// Trace-norm residual ||L(rho)||_1 / ||rho||_1 of the generator at rho.
double generator_residual(const EffectiveParams& params, const DensityMatrix& rho);

enum class SteadyMethod { evolve, direct };

struct SteadyConfig {
  double residual_tol = 1e-9;
  double t_cap = 400.0;          // 1/gamma units
  double check_interval = 0.25;  // time between residual checks
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double truncation_tol = 1e-8;
};

struct SteadyReport {
  DensityMatrix state;
  Observables obs;
  SteadyMethod method = SteadyMethod::evolve;
  double residual = 0.0;
  bool truncation_ok = true;
  double edge_weight = 0.0;
  double t_reached = 0.0;  // evolve method only
  Rk45Stats stats;
  ConservationStats conservation;
};

// Integrates from the vacuum until the generator residual drops below
// residual_tol; throws NotConvergedError (with the last residual) when
// t_cap is hit first — expected near the critical line, where the caller
// should raise t_cap.
SteadyReport steady_state_evolve(const EffectiveParams& params, int cutoff,
                                 const SteadyConfig& config = {});

// Solves L(rho) = 0 restricted to the even-parity block, which the
// vacuum-initialized dynamics never leaves; the restriction removes the
// steady-state degeneracy of the two-photon generator. One equation is
// replaced by the unit-trace constraint and the assembled sparse system is
// LU-factorized; the result must pass a residual check at 1e-10.
SteadyReport steady_state_direct(const EffectiveParams& params, int cutoff);

// Cutoff heuristic max(16, ceil(4 m + 10 sqrt(m))), m = g / 2 gamma:
// steady photon statistics are close to Poissonian with mean ~ m.
int suggest_cutoff(const EffectiveParams& params);

struct AutoSteadyConfig {
  SteadyConfig steady;
  int direct_unknown_limit = 8000;  // even-block unknowns; above: evolve
  int max_retries = 2;              // cutoff retries at 1.5x on inadequacy
  int cutoff = 0;                   // 0: use suggest_cutoff
};

// Heuristic cutoff + method selection + truncation retry in one call.
SteadyReport steady_state_auto(const EffectiveParams& params,
                               const AutoSteadyConfig& config = {});

}  // namespace dpt
