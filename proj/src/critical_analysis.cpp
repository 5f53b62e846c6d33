#include "dpt/critical_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "dpt/stationary_theory.hpp"

namespace dpt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int resolve_workers(int requested, std::size_t jobs) {
  int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  return static_cast<int>(std::min<std::size_t>(w, jobs));
}

// Fixed-width work queue over [0, jobs). The first exception wins; the
// queue drains and the exception is rethrown on the caller thread.
void parallel_for(std::size_t jobs, int workers, const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) return;
  workers = resolve_workers(workers, jobs);
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void require_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) {
    throw InvalidParameterError(std::string(name) + " axis must be non-empty");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw InvalidParameterError(std::string(name) + " axis must be strictly increasing");
    }
  }
}

double uniform_spacing(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) return 0.0;
  const double h = axis[1] - axis[0];
  for (std::size_t i = 1; i + 1 < axis.size(); ++i) {
    if (std::abs((axis[i + 1] - axis[i]) - h) > 1e-9 * std::max(h, 1.0)) {
      throw InvalidParameterError(std::string(name) + " axis must be uniform");
    }
  }
  return h;
}

// One steady-state evaluation at (delta, g), gamma = 1.
SweepPoint solve_point(Backend backend, double delta, double g, const SweepOptions& opt) {
  const EffectiveParams params(g, 1.0, delta);
  SweepPoint p;
  try {
    if (backend == Backend::meanfield) {
      const Complex psi = steady_psi(params, opt.meanfield);
      p.abs_psi = std::abs(psi);
      p.n = n_from_psi(psi);
    } else {
      const SteadyReport report = steady_state_auto(params, opt.master);
      p.abs_psi = std::abs(report.obs.psi);
      p.n = report.obs.n;
      p.cutoff = report.state.dim;
    }
    p.converged = true;
  } catch (const NotConvergedError&) {
  } catch (const TruncationError&) {
  } catch (const SolverError&) {
  } catch (const InternalConsistencyError&) {
  }
  return p;
}

double abs_psi_at(Backend backend, double delta, double g, const SweepOptions& opt) {
  const SweepPoint p = solve_point(backend, delta, g, opt);
  if (!p.converged) {
    throw NotConvergedError("steady-state evaluation failed at delta=" +
                                std::to_string(delta) + ", g=" + std::to_string(g),
                            0.0, 0.0);
  }
  return p.abs_psi;
}

}  // namespace

SweepGrid sweep(Backend backend, std::vector<double> delta_axis,
                std::vector<double> g_axis, const SweepOptions& options) {
  require_axis(delta_axis, "delta");
  require_axis(g_axis, "g");

  SweepGrid grid;
  grid.delta_axis = std::move(delta_axis);
  grid.g_axis = std::move(g_axis);
  grid.backend = backend;
  const std::size_t nd = grid.delta_axis.size();
  const std::size_t ng = grid.g_axis.size();
  grid.points.resize(nd * ng);

  parallel_for(nd * ng, options.workers, [&](std::size_t idx) {
    const std::size_t i = idx / ng;
    const std::size_t j = idx % ng;
    grid.points[idx] = solve_point(backend, grid.delta_axis[i], grid.g_axis[j], options);
  });

  bool any = false;
  for (const auto& p : grid.points) any = any || p.converged;
  if (!any) {
    throw Error("sweep: every grid point failed to converge");
  }
  return grid;
}

SusceptibilityMap susceptibility(const SweepGrid& grid) {
  const std::size_t nd = grid.delta_axis.size();
  const std::size_t ng = grid.g_axis.size();
  if (ng < 3) {
    throw InvalidParameterError("susceptibility needs at least 3 g points");
  }

  SusceptibilityMap map;
  map.delta_axis = grid.delta_axis;
  map.g_axis = grid.g_axis;
  map.g_spacing = uniform_spacing(grid.g_axis, "g");
  map.delta_spacing = nd > 1 ? uniform_spacing(grid.delta_axis, "delta") : 0.0;
  map.chi.assign(nd * ng, 0.0);
  map.chi_norm.assign(nd * ng, 0.0);
  map.valid.assign(nd * ng, 0);
  map.ridge.assign(ng, kNaN);

  const auto idx = [ng](std::size_t i, std::size_t j) { return i * ng + j; };

  for (std::size_t i = 0; i < nd; ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      const std::size_t lo = (j == 0) ? 0 : j - 1;
      const std::size_t hi = (j + 1 == ng) ? j : j + 1;
      const auto& a = grid.at(i, lo);
      const auto& b = grid.at(i, hi);
      if (a.converged && b.converged) {
        map.chi[idx(i, j)] =
            (b.abs_psi - a.abs_psi) / (grid.g_axis[hi] - grid.g_axis[lo]);
        map.valid[idx(i, j)] = 1;
      }
    }
    // per-delta normalization over its own maximum
    double row_max = 0.0;
    for (std::size_t j = 0; j < ng; ++j) {
      if (map.valid[idx(i, j)]) row_max = std::max(row_max, map.chi[idx(i, j)]);
    }
    if (row_max > 0.0) {
      for (std::size_t j = 0; j < ng; ++j) {
        if (map.valid[idx(i, j)]) {
          map.chi_norm[idx(i, j)] =
              std::clamp(map.chi[idx(i, j)] / row_max, 0.0, 1.0);
        }
      }
    }
  }

  // Ridge: argmax of chi over delta per g column, ties toward |delta| = 0,
  // refined by a 3-point parabola when the maximum is interior.
  for (std::size_t j = 0; j < ng; ++j) {
    std::size_t best = nd;
    for (std::size_t i = 0; i < nd; ++i) {
      if (!map.valid[idx(i, j)]) continue;
      if (best == nd || map.chi[idx(i, j)] > map.chi[idx(best, j)] ||
          (map.chi[idx(i, j)] == map.chi[idx(best, j)] &&
           std::abs(grid.delta_axis[i]) < std::abs(grid.delta_axis[best]))) {
        best = i;
      }
    }
    if (best == nd) continue;
    double pos = grid.delta_axis[best];
    if (best > 0 && best + 1 < nd && map.valid[idx(best - 1, j)] &&
        map.valid[idx(best + 1, j)]) {
      const double y0 = map.chi[idx(best - 1, j)];
      const double y1 = map.chi[idx(best, j)];
      const double y2 = map.chi[idx(best + 1, j)];
      const double denom = y0 - 2.0 * y1 + y2;
      if (denom < 0.0) {
        const double offset = std::clamp(0.5 * (y0 - y2) / denom, -0.5, 0.5);
        pos += offset * map.delta_spacing;
      }
    }
    map.ridge[j] = pos;
  }
  return map;
}

ThresholdEstimate find_threshold(const SusceptibilityMap& map) {
  return find_threshold(map, map.delta_spacing);
}

ThresholdEstimate find_threshold(const SusceptibilityMap& map, double exceedance) {
  const std::size_t ng = map.g_axis.size();
  if (ng < 2) {
    throw NoThresholdError("threshold detection needs more than one g column");
  }
  if (!(exceedance > 0.0)) {
    throw InvalidParameterError("threshold exceedance must be > 0");
  }

  std::size_t prev = ng;  // last valid column below the departure
  for (std::size_t j = 0; j < ng; ++j) {
    if (std::isnan(map.ridge[j])) continue;
    if (map.ridge[j] > exceedance) {
      if (prev == ng) {
        throw NoThresholdError(
            "ridge already above the exceedance at the low edge of the g range; "
            "extend the range downward");
      }
      // Bisection on the linear ridge interpolant between the bracket columns.
      double lo = map.g_axis[prev], hi = map.g_axis[j];
      const double r_lo = map.ridge[prev], r_hi = map.ridge[j];
      const auto ridge_at = [&](double g) {
        return r_lo + (r_hi - r_lo) * (g - map.g_axis[prev]) /
                          (map.g_axis[j] - map.g_axis[prev]);
      };
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ridge_at(mid) > exceedance ? hi : lo) = mid;
      }
      return {0.5 * (lo + hi), map.g_spacing, exceedance};
    }
    prev = j;
  }
  throw NoThresholdError("susceptibility ridge never departs from zero within the "
                         "scanned g range; extend the range upward");
}

CurvatureScan curvature_scan(Backend backend, const std::vector<double>& g_axis,
                             const CurvatureOptions& options) {
  require_axis(g_axis, "g");
  CurvatureScan scan;
  scan.backend = backend;
  scan.stencil = options.stencil > 0.0
                     ? options.stencil
                     : (backend == Backend::meanfield ? 1e-4 : 1e-2);
  scan.points.resize(g_axis.size());

  const double h = scan.stencil;
  const auto value = [&](double delta, double g) {
    if (backend == Backend::meanfield) {
      return psi_qf(EffectiveParams(g, 1.0, delta)).psi_abs;
    }
    return abs_psi_at(backend, delta, g, options.solver);
  };

  parallel_for(g_axis.size(), options.solver.workers, [&](std::size_t j) {
    const double g = g_axis[j];
    const double mid = value(0.0, g);
    const auto second_diff = [&](double step) {
      return (value(-step, g) - 2.0 * mid + value(step, g)) / (step * step);
    };
    const double c_full = second_diff(h);
    const double c_half = second_diff(0.5 * h);
    const bool warn = std::abs(c_full - c_half) > 0.01 * std::max(std::abs(c_half), 1e-12);
    scan.points[j] = {g, c_full, warn};
  });
  return scan;
}

PowerLawFit fit_exponent(Backend backend, double g_lo, double g_hi, int n_points,
                         const SweepOptions& options) {
  if (n_points < 5) {
    throw InvalidParameterError("fit_exponent refuses windows with fewer than 5 points");
  }
  if (!(g_lo > 0.0) || !(g_hi > g_lo)) {
    throw InvalidParameterError("fit window must satisfy 0 < g_lo < g_hi");
  }

  std::vector<double> gs(n_points);
  const double ratio = g_hi / g_lo;
  for (int i = 0; i < n_points; ++i) {
    gs[i] = g_lo * std::pow(ratio, double(i) / (n_points - 1));
  }

  std::vector<double> psi(n_points);
  parallel_for(gs.size(), options.workers, [&](std::size_t i) {
    psi[i] = abs_psi_at(backend, gs[i], gs[i], options);  // critical line delta = g
  });

  PowerLawFit fit;
  fit.window_lo = g_lo;
  fit.window_hi = g_hi;
  for (int i = 0; i < n_points; ++i) {
    if (!(psi[i] > 0.0)) {
      throw InternalConsistencyError("fit_exponent: |psi| <= 0 along the critical line");
    }
    fit.points.push_back({std::log(gs[i]), std::log(psi[i])});
  }

  const auto line_fit = [](const std::vector<std::array<double, 2>>& pts) {
    const std::size_t n = pts.size();
    double sx = 0, sy = 0;
    for (const auto& p : pts) {
      sx += p[0];
      sy += p[1];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, ssr = 0, syy = 0;
    for (const auto& p : pts) {
      sxx += (p[0] - mx) * (p[0] - mx);
      sxy += (p[0] - mx) * (p[1] - my);
      syy += (p[1] - my) * (p[1] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    for (const auto& p : pts) {
      const double r = p[1] - (slope * p[0] + intercept);
      ssr += r * r;
    }
    const double stderr2 = (n > 2) ? ssr / double(n - 2) / sxx : 0.0;
    const double r2 = (syy > 0.0) ? 1.0 - ssr / syy : 1.0;
    return std::array<double, 4>{slope, intercept, std::sqrt(stderr2), r2};
  };

  const auto full = line_fit(fit.points);
  fit.slope = full[0];
  fit.intercept = full[1];
  fit.slope_stderr = full[2];
  fit.r_squared = full[3];
  fit.delta_exponent = 1.0 / fit.slope;
  fit.delta_stderr = fit.slope_stderr / (fit.slope * fit.slope);
  fit.poor_fit = fit.r_squared < 0.99;

  auto drop_first = fit.points;
  drop_first.erase(drop_first.begin());
  auto drop_last = fit.points;
  drop_last.pop_back();
  const double d_first = 1.0 / line_fit(drop_first)[0];
  const double d_last = 1.0 / line_fit(drop_last)[0];
  fit.sensitivity_lo = std::min(d_first, d_last);
  fit.sensitivity_hi = std::max(d_first, d_last);
  return fit;
}

}  // namespace dpt
