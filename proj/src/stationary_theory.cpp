#include "dpt/stationary_theory.hpp"

#include <cmath>

#include "dpt/mean_field.hpp"

namespace dpt {

namespace {

void require_gamma(double gamma) {
  if (!(gamma > 0.0)) {
    throw DegenerateModelError("gamma must be > 0");
  }
}

// u = |psi|^2 solving 4 gamma^2 u^2 - w u - g^2/4 = 0, w = g^2-delta^2-gamma^2,
// as u = (r + w/2) / (4 gamma^2) with r = sqrt(g^2 gamma^2 + w^2/4). For w < 0
// the difference r + w/2 cancels; use (r + w/2)(r - w/2) = g^2 gamma^2.
double qf_root(double g, double gamma, double delta) {
  const double w = g * g - delta * delta - gamma * gamma;
  const double r = std::hypot(g * gamma, 0.5 * w);
  const double num = (w >= 0.0) ? (r + 0.5 * w) : (g * g * gamma * gamma) / (r - 0.5 * w);
  return num / (4.0 * gamma * gamma);
}

}  // namespace

Delta0Moments psi_exact_delta0(double g, double gamma) {
  require_gamma(gamma);
  if (g < 0.0) {
    throw InvalidParameterError("g must be >= 0 in the canonical gauge");
  }
  const double psi = g / (2.0 * gamma);
  return {psi, psi * std::tanh(psi), n_from_abs_psi(psi)};
}

double psi_semiclassical(const EffectiveParams& params) {
  require_gamma(params.gamma);
  const double s = params.g * params.g - params.delta * params.delta;
  return s > 0.0 ? std::sqrt(s) / (2.0 * params.gamma) : 0.0;
}

StationarySolution psi_qf(const EffectiveParams& params) {
  require_gamma(params.gamma);
  StationarySolution sol;
  sol.branch = Branch::quantum;
  const double u = qf_root(params.g, params.gamma, params.delta);
  sol.psi_abs = std::sqrt(u);
  sol.n = n_from_abs_psi(sol.psi_abs);
  if (params.g > 0.0) {
    const double cos_phi = 2.0 * params.gamma * sol.psi_abs / params.g;
    const double sin_phi =
        -params.delta * cos_phi / (params.gamma * std::sqrt(1.0 + 4.0 * u));
    sol.psi_phase = std::atan2(sin_phi, cos_phi);
  }
  return sol;
}

LandauCoefficients biquadratic_coeffs(const EffectiveParams& params) {
  require_gamma(params.gamma);
  const double g2 = params.g * params.g;
  const double gamma2 = params.gamma * params.gamma;
  const double d2 = params.delta * params.delta;
  LandauCoefficients c;
  c.quadratic_a = 0.5 * (d2 - g2 + gamma2);
  c.quartic_b = gamma2;
  c.field_h = 0.25 * g2;
  c.polynomial = {4.0 * gamma2, d2 - g2 + gamma2, -0.25 * g2};
  return c;
}

double biquadratic_positive_root(const LandauCoefficients& c) {
  const double a = c.polynomial[0];
  const double b = c.polynomial[1];
  const double q = c.polynomial[2];
  const double disc = std::sqrt(b * b - 4.0 * a * q);  // q <= 0, so disc >= |b|
  return (b >= 0.0) ? (-2.0 * q) / (b + disc) : (disc - b) / (2.0 * a);
}

std::optional<double> critical_boundary(double g, double gamma) {
  require_gamma(gamma);
  if (g < gamma) return std::nullopt;  // below the pump threshold g_th = gamma
  return std::sqrt(g * g - gamma * gamma);
}

double curvature_delta0(double g, double gamma) {
  require_gamma(gamma);
  if (!(g > 0.0)) {
    throw InvalidParameterError("curvature_delta0 requires g > 0");
  }
  return -g / (2.0 * gamma * (g * g + gamma * gamma));
}

double curvature_delta0_fd(double g, double gamma, double step) {
  require_gamma(gamma);
  const double h = step * gamma;
  const double lo = std::sqrt(qf_root(g, gamma, -h));
  const double mid = std::sqrt(qf_root(g, gamma, 0.0));
  const double hi = std::sqrt(qf_root(g, gamma, h));
  return (lo - 2.0 * mid + hi) / (h * h);
}

}  // namespace dpt
