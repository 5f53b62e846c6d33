#include "dpt/mean_field.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace dpt {

namespace {

double scaled_err(double err, double mag, double rel_tol, double abs_tol) {
  return err / (abs_tol + rel_tol * mag);
}

// (G, Re F, Im F) packed for the integrator.
using GreenVec = Eigen::Vector3d;

GreenVec pack(const GreenPair& s) { return {s.g_fn, s.f_fn.real(), s.f_fn.imag()}; }
GreenPair unpack(const GreenVec& v) { return {v[0], Complex(v[1], v[2])}; }

double invariant(const GreenVec& v) { return v[0] * v[0] - v[1] * v[1] - v[2] * v[2]; }

}  // namespace

Complex mf_rhs(Complex psi, const EffectiveParams& params) {
  const double root = std::sqrt(1.0 + 4.0 * std::norm(psi));
  return Complex(0.0, -2.0 * params.delta) * psi +
         root * (params.g - 2.0 * params.gamma * psi);
}

GreenPair green_rhs(const GreenPair& s, const EffectiveParams& params,
                    DecouplingChannel channel) {
  const Complex rot = Complex(0.0, -2.0 * params.delta) * s.f_fn;
  GreenPair d;
  if (channel == DecouplingChannel::cooper) {
    const Complex g_eff = params.g - params.gamma * s.f_fn;
    d.g_fn = 2.0 * (g_eff * std::conj(s.f_fn)).real();
    d.f_fn = rot + 2.0 * g_eff * s.g_fn;
  } else {
    // Wick-complete decoupling: <a^+2 a^2> -> |F|^2/4 + 2n^2 and
    // <(2a^+a+1)a^2> -> (F/2)(3G - 2).
    const double n = 0.5 * (s.g_fn - 1.0);
    d.g_fn = 2.0 * params.g * s.f_fn.real() - 2.0 * params.gamma * std::norm(s.f_fn) -
             16.0 * params.gamma * n * n;
    d.f_fn = rot + 2.0 * params.g * s.g_fn -
             2.0 * params.gamma * s.f_fn * (3.0 * s.g_fn - 2.0);
  }
  return d;
}

double n_from_abs_psi(double abs_psi) {
  return 0.5 * (std::sqrt(1.0 + 4.0 * abs_psi * abs_psi) - 1.0);
}

double n_from_psi(Complex psi) { return n_from_abs_psi(std::abs(psi)); }

MfTrajectory evolve_psi(Complex psi0, const EffectiveParams& params,
                        const MfConfig& config) {
  if (!std::isfinite(psi0.real()) || !std::isfinite(psi0.imag())) {
    throw InvalidParameterError("psi0 must be finite");
  }
  MfTrajectory traj;
  traj.params = params;

  const auto rhs = [&](const Complex& psi) { return mf_rhs(psi, params); };
  const auto err_ratio = [&](const Complex& e, const Complex& y0, const Complex& y1) {
    return scaled_err(std::abs(e), std::max(std::abs(y0), std::abs(y1)),
                      config.rel_tol, config.abs_tol);
  };
  const double steady_rate = config.steady_factor * std::max(params.gamma, params.g);
  const auto at_steady = [&](Complex psi) { return std::abs(mf_rhs(psi, params)) <= steady_rate; };

  Rk45Options opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol;

  Complex psi = psi0;
  traj.samples.push_back({0.0, psi});

  if (config.stop_at_steady) {
    double t = 0.0;
    const double chunk = 0.5;
    bool steady = at_steady(psi);
    while (!steady && t < config.t_cap) {
      const double t_next = std::min(t + chunk, config.t_cap);
      const auto s = integrate_rk45(rhs, err_ratio, psi, t, t_next, opt,
                                    [](double, const Complex&) {});
      opt.dt_init = s.dt_last;
      traj.stats.steps += s.steps;
      traj.stats.rejected += s.rejected;
      traj.stats.dt_last = s.dt_last;
      t = t_next;
      traj.samples.push_back({t, psi});
      steady = at_steady(psi);
    }
    traj.steady_reached = steady;
    traj.t_final = t;
    if (!steady) {
      throw NotConvergedError("mean-field evolution did not reach the steady state by t_cap",
                              std::abs(mf_rhs(psi, params)), t);
    }
    return traj;
  }

  const int samples = std::max(config.samples, 2);
  for (int i = 1; i < samples; ++i) {
    const double t0 = config.t_max * (i - 1) / (samples - 1);
    const double t1 = config.t_max * i / (samples - 1);
    const auto s = integrate_rk45(rhs, err_ratio, psi, t0, t1, opt,
                                  [](double, const Complex&) {});
    opt.dt_init = s.dt_last;
    traj.stats.steps += s.steps;
    traj.stats.rejected += s.rejected;
    traj.stats.dt_last = s.dt_last;
    traj.samples.push_back({t1, psi});
  }
  traj.t_final = config.t_max;
  traj.steady_reached = at_steady(psi);
  return traj;
}

Complex steady_psi(const EffectiveParams& params, const MfConfig& config) {
  MfConfig c = config;
  c.stop_at_steady = true;
  return evolve_psi(Complex(0.0, 0.0), params, c).samples.back().psi;
}

GreenTrajectory evolve_green(const GreenPair& initial, const EffectiveParams& params,
                             const MfConfig& config, DecouplingChannel channel) {
  if (initial.g_fn < 1.0 - 1e-10) {
    throw InvalidParameterError("G must be >= 1 (vacuum fluctuations set the floor)");
  }
  GreenTrajectory traj;
  traj.params = params;
  traj.channel = channel;

  GreenVec y = pack(initial);
  const double c0 = invariant(y);
  const bool monitor = (channel == DecouplingChannel::cooper);

  const auto rhs = [&](const GreenVec& v) { return pack(green_rhs(unpack(v), params, channel)); };
  const auto err_ratio = [&](const GreenVec& e, const GreenVec& y0, const GreenVec& y1) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double mag = std::max(std::abs(y0[i]), std::abs(y1[i]));
      worst = std::max(worst, scaled_err(std::abs(e[i]), mag, config.rel_tol, config.abs_tol));
    }
    return worst;
  };
  const auto watch = [&](double t, const GreenVec& v) {
    if (!monitor) return;
    const double drift = std::abs(invariant(v) - c0);
    traj.max_invariant_drift = std::max(traj.max_invariant_drift, drift);
    if (drift > 1e-6) {
      throw IntegrationError("Green-pair integral of motion drifted beyond 1e-6", t);
    }
  };

  Rk45Options opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol;

  traj.samples.push_back({0.0, initial});
  const int samples = std::max(config.samples, 2);
  for (int i = 1; i < samples; ++i) {
    const double t0 = config.t_max * (i - 1) / (samples - 1);
    const double t1 = config.t_max * i / (samples - 1);
    const auto s = integrate_rk45(rhs, err_ratio, y, t0, t1, opt, watch);
    opt.dt_init = s.dt_last;
    traj.stats.steps += s.steps;
    traj.stats.rejected += s.rejected;
    traj.stats.dt_last = s.dt_last;
    traj.samples.push_back({t1, unpack(y)});
  }
  return traj;
}

}  // namespace dpt
