// rk45.hpp — adaptive embedded Runge-Kutta 5(4), Dormand-Prince pair with
// FSAL, for autonomous ODEs over any vector-space state (Eigen matrices,
// std::complex, ...).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "dpt/errors.hpp"

namespace dpt {

struct Rk45Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double dt_init = 0.0;  // 0: pick from the first derivative
  double dt_min = 1e-14;
  std::uint64_t max_steps = 50'000'000;
};

struct Rk45Stats {
  std::uint64_t steps = 0;
  std::uint64_t rejected = 0;
  double dt_last = 0.0;
};

// Integrates dy/dt = rhs(y) from t0 to t1.
//
// rhs:       State -> State
// err_ratio: (err_estimate, y_old, y_new) -> scaled error; accept iff <= 1.
//            The engines use a max-norm scaled by abs_tol + rel_tol*|y|.
// on_step:   called as on_step(t, y) after every accepted step.
//
// Returns stepping statistics; stats.dt_last seeds the next segment when a
// trajectory is integrated in pieces.
template <class State, class Rhs, class ErrRatio, class Observer>
Rk45Stats integrate_rk45(Rhs&& rhs, ErrRatio&& err_ratio, State& y, double t0,
                         double t1, const Rk45Options& opt, Observer&& on_step) {
  // Dormand-Prince coefficients.
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b* (5th minus embedded 4th order weights).
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  Rk45Stats stats;
  if (!(t1 > t0)) return stats;

  double t = t0;
  State k1 = rhs(y);
  double dt = opt.dt_init;
  if (dt <= 0.0) {
    // Hairer-style starter: 1% of the tolerance-scaled time constant.
    const double d1 = err_ratio(k1, y, y);
    dt = (d1 > 0.0 && std::isfinite(d1)) ? 0.01 / (opt.rel_tol * d1) : t1 - t0;
    dt = std::min(dt, t1 - t0);
  }

  while (t < t1) {
    if (stats.steps + stats.rejected >= opt.max_steps) {
      throw IntegrationError("rk45: step budget exhausted", t);
    }
    dt = std::min(dt, t1 - t);
    if (dt < opt.dt_min) {
      throw IntegrationError("rk45: step size underflow", t);
    }

    State k2 = rhs(State(y + (dt * a21) * k1));
    State k3 = rhs(State(y + (dt * a31) * k1 + (dt * a32) * k2));
    State k4 = rhs(State(y + (dt * a41) * k1 + (dt * a42) * k2 + (dt * a43) * k3));
    State k5 = rhs(State(y + (dt * a51) * k1 + (dt * a52) * k2 + (dt * a53) * k3 +
                         (dt * a54) * k4));
    State k6 = rhs(State(y + (dt * a61) * k1 + (dt * a62) * k2 + (dt * a63) * k3 +
                         (dt * a64) * k4 + (dt * a65) * k5));
    State ynew = y + (dt * b1) * k1 + (dt * b3) * k3 + (dt * b4) * k4 +
                 (dt * b5) * k5 + (dt * b6) * k6;
    State k7 = rhs(ynew);  // FSAL
    State err = (dt * e1) * k1 + (dt * e3) * k3 + (dt * e4) * k4 +
                (dt * e5) * k5 + (dt * e6) * k6 + (dt * e7) * k7;

    double r = err_ratio(err, y, ynew);
    if (!std::isfinite(r)) r = 1e10;

    if (r <= 1.0) {
      t += dt;
      y = std::move(ynew);
      k1 = std::move(k7);
      ++stats.steps;
      on_step(t, y);
      const double grow = (r > 0.0) ? 0.9 * std::pow(r, -0.2) : 5.0;
      dt *= std::clamp(grow, 0.2, 5.0);
      stats.dt_last = dt;
    } else {
      ++stats.rejected;
      const double shrink = 0.9 * std::pow(r, -0.2);
      dt *= std::clamp(shrink, 0.1, 0.9);
    }
  }
  return stats;
}

}  // namespace dpt
