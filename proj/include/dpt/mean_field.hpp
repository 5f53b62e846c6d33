// mean_field.hpp — quantum-fluctuation-aware mean-field dynamics: the
// equal-time Keldysh Green-function pair and the reduced equation of motion
// for the anomalous average psi = <a^2>.
#pragma once

#include <complex>
#include <vector>

#include "dpt/fock_ops.hpp"
#include "dpt/rk45.hpp"

namespace dpt {

// Equal-time Keldysh pair: G = 2n + 1 (real, >= 1 from vacuum) and
// F = 2 psi (complex). From vacuum initial data G^2 - |F|^2 = 1 is an
// integral of motion.
struct GreenPair {
  double g_fn = 1.0;
  Complex f_fn = {0.0, 0.0};
};

// Which mean-field decoupling closes the quartic moments. The pairing
// ("Cooper") channel keeps <a^+2 a^2> ~ |F|^2/4 and <(2a^+a+1)a^2> ~ FG/2
// and drives all results; the density variant adds the Wick density
// contractions (<a^+2 a^2> ~ |F|^2/4 + 2n^2) and is kept only for
// comparison experiments. It breaks the G^2 - |F|^2 conservation law, so
// no reduced psi-equation exists for it.
enum class DecouplingChannel { cooper, cooper_plus_density };

// d psi/dt = -2i delta psi + sqrt(1 + 4|psi|^2) (g - 2 gamma psi).
Complex mf_rhs(Complex psi, const EffectiveParams& params);

// Green-pair right-hand side; g_eff = g - gamma F.
GreenPair green_rhs(const GreenPair& s, const EffectiveParams& params,
                    DecouplingChannel channel = DecouplingChannel::cooper);

// n = (sqrt(1 + 4|psi|^2) - 1)/2.
double n_from_psi(Complex psi);
double n_from_abs_psi(double abs_psi);

struct MfConfig {
  double t_max = 2.0;     // recorded horizon, 1/gamma units
  double t_cap = 400.0;   // hard cap when stopping at the steady state
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int samples = 400;
  bool stop_at_steady = false;
  // Steady when |d psi/dt| <= steady_factor * max(gamma, |g|).
  double steady_factor = 1e-10;
};

struct MfSample {
  double t;
  Complex psi;
};

struct MfTrajectory {
  std::vector<MfSample> samples;
  EffectiveParams params;
  bool steady_reached = false;
  double t_final = 0.0;
  Rk45Stats stats;
};

// Integrates the reduced psi equation from psi0 (vacuum: 0). With
// stop_at_steady the run ends at the steady-state flag or throws
// NotConvergedError at t_cap.
MfTrajectory evolve_psi(Complex psi0, const EffectiveParams& params,
                        const MfConfig& config = {});

// Steady-state anomalous average via the reduced equation from vacuum.
Complex steady_psi(const EffectiveParams& params, const MfConfig& config = {});

struct GreenSample {
  double t;
  GreenPair state;
};

struct GreenTrajectory {
  std::vector<GreenSample> samples;
  EffectiveParams params;
  DecouplingChannel channel;
  double max_invariant_drift = 0.0;  // max |G^2 - |F|^2 - const| along the run
  Rk45Stats stats;
};

// Integrates the Green-pair equations. Requires G0 >= 1. For the Cooper
// channel the invariant G^2 - |F|^2 is monitored against its initial value;
// drift beyond 1e-6 aborts with IntegrationError.
GreenTrajectory evolve_green(const GreenPair& initial, const EffectiveParams& params,
                             const MfConfig& config = {},
                             DecouplingChannel channel = DecouplingChannel::cooper);

}  // namespace dpt
