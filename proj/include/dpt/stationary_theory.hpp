// stationary_theory.hpp — closed-form stationary and critical results:
// exact delta = 0 moments, semiclassical and quantum-fluctuation-corrected
// solutions, the biquadratic/Landau coefficients, the critical boundary
// and the curvature of |psi| at zero detuning.
#pragma once

#include <array>
#include <optional>

#include "dpt/fock_ops.hpp"

namespace dpt {

enum class Branch { semiclassical, quantum, exact };

struct StationarySolution {
  double psi_abs = 0.0;
  // arg(psi); unset when g = 0 (phase undefined).
  std::optional<double> psi_phase;
  double n = 0.0;
  Branch branch = Branch::quantum;
};

// Exact and mean-field photon numbers at delta = 0; psi = g / 2 gamma is
// shared by both.
struct Delta0Moments {
  double psi;
  double n_exact;      // psi tanh(psi)
  double n_meanfield;  // (sqrt(1 + 4 psi^2) - 1)/2
};

Delta0Moments psi_exact_delta0(double g, double gamma);

// |psi| = theta(g^2 - delta^2) sqrt(g^2 - delta^2) / 2 gamma: hard
// threshold at |delta| = g, no quantum fluctuations.
double psi_semiclassical(const EffectiveParams& params);

// Quantum-fluctuation-corrected stationary solution:
// |psi| = sqrt(sqrt(g^2 gamma^2 + w^2/4) + w/2) / 2 gamma, w = g^2-delta^2-gamma^2,
// with the phase fixed by stationarity of the reduced psi equation.
StationarySolution psi_qf(const EffectiveParams& params);

// Landau-theory reading of the biquadratic stationarity condition
//   4 gamma^2 u^2 + (delta^2 - g^2 + gamma^2) u = g^2 / 4,  u = |psi|^2.
// The (A, B, h) identification mirrors Phi = A eta^2 + B eta^4 - h eta;
// the eta^4-vs-eta^3 bookkeeping mismatch is inherited from the analogy
// and left as such.
struct LandauCoefficients {
  double quadratic_a;  // A = (delta^2 - g^2 + gamma^2)/2
  double quartic_b;    // B = gamma^2
  double field_h;      // h = g^2/4
  // Literal polynomial p0 u^2 + p1 u + p2 = 0.
  std::array<double, 3> polynomial;
};

LandauCoefficients biquadratic_coeffs(const EffectiveParams& params);

// Unique non-negative root u = |psi|^2 of the biquadratic, evaluated in a
// cancellation-safe form.
double biquadratic_positive_root(const LandauCoefficients& c);

// Critical detuning delta_0(g) = sqrt(g^2 - gamma^2) for g >= gamma;
// below the threshold pump rate g_th = gamma there is no critical point
// and nullopt is returned.
std::optional<double> critical_boundary(double g, double gamma);

// d^2|psi|/d delta^2 at delta = 0, closed form: -g / (2 gamma (g^2 + gamma^2)).
double curvature_delta0(double g, double gamma);

// Central-difference variant on the closed-form |psi|(delta); step in
// gamma units.
double curvature_delta0_fd(double g, double gamma, double step = 1e-4);

}  // namespace dpt
