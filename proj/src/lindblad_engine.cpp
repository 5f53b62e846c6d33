#include "dpt/lindblad_engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace dpt {

namespace {

// Banded kernel for d rho/dt = -i[H, rho] + 2 gamma D[a^2](rho). Every
// operator in the model shifts Fock indices by 0 or +-2, so one apply is a
// handful of O(N^2) passes instead of dense matrix products. Verified
// against the dense fock_ops::lindblad_rhs in the unit tests.
class TwoPhotonRhs {
 public:
  TwoPhotonRhs(const EffectiveParams& params, int cutoff)
      : n_(cutoff), half_g_(0.5 * params.g), two_gamma_(2.0 * params.gamma) {
    c2_.resize(n_ - 2);
    for (int j = 0; j + 2 < n_; ++j) {
      c2_[j] = std::sqrt(double(j + 1) * double(j + 2));
    }
    weight_.resize(n_, n_);
    for (int k = 0; k < n_; ++k) {
      for (int j = 0; j < n_; ++j) {
        const double decay = double(j) * double(j - 1) + double(k) * double(k - 1);
        weight_(j, k) = Complex(-params.gamma * decay, -params.delta * double(j - k));
      }
    }
  }

  int dim() const { return n_; }

  Matrix operator()(const Matrix& rho) const {
    const int m = n_ - 2;
    Matrix out = weight_.cwiseProduct(rho);
    const auto scale = c2_.asDiagonal();
    if (half_g_ != 0.0) {
      out.bottomRows(m).noalias() += half_g_ * (scale * rho.topRows(m));
      out.leftCols(m).noalias() -= half_g_ * (rho.rightCols(m) * scale);
      out.topRows(m).noalias() -= half_g_ * (scale * rho.bottomRows(m));
      out.rightCols(m).noalias() += half_g_ * (rho.leftCols(m) * scale);
    }
    out.topLeftCorner(m, m).noalias() +=
        two_gamma_ * (scale * rho.bottomRightCorner(m, m) * scale);
    return out;
  }

 private:
  int n_;
  double half_g_;
  double two_gamma_;
  Eigen::VectorXd c2_;
  Matrix weight_;
};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double matrix_err_ratio(const Matrix& err, const Matrix& y0, const Matrix& y1,
                        double rel_tol, double abs_tol) {
  return (err.cwiseAbs().array() /
          (abs_tol + rel_tol * y0.cwiseAbs().cwiseMax(y1.cwiseAbs()).array()))
      .maxCoeff();
}

double trace_norm_hermitian(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double odd_population(const Matrix& rho) {
  double w = 0.0;
  for (int j = 1; j < rho.rows(); j += 2) {
    w += std::abs(rho(j, j).real());
  }
  return w;
}

void track_conservation(ConservationStats& cs, const Matrix& rho) {
  cs.max_trace_drift = std::max(cs.max_trace_drift, std::abs(rho.trace().real() - 1.0));
  cs.max_herm_dev = std::max(cs.max_herm_dev, max_abs(rho - rho.adjoint()));
  cs.max_odd_leakage = std::max(cs.max_odd_leakage, odd_population(rho));
}

double edge_population(const Matrix& rho, int top_levels) {
  const int n = static_cast<int>(rho.rows());
  double w = 0.0;
  for (int j = std::max(0, n - top_levels); j < n; ++j) {
    w += rho(j, j).real();
  }
  return w;
}

}  // namespace

DensityMatrix vacuum_state(int cutoff) {
  if (cutoff < 2) {
    throw InvalidCutoffError("vacuum_state requires a cutoff of at least 2");
  }
  DensityMatrix rho{cutoff, Matrix::Zero(cutoff, cutoff)};
  rho.entries(0, 0) = 1.0;
  return rho;
}

void validate_density(const DensityMatrix& rho, bool full_check) {
  if (rho.entries.rows() != rho.entries.cols() ||
      rho.entries.rows() != rho.dim) {
    throw ShapeError("density matrix dimensions are inconsistent");
  }
  const Matrix& m = rho.entries;
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(m - m.adjoint()) > 1e-10 * scale) {
    throw InternalConsistencyError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > 1e-8) {
    throw InternalConsistencyError("density matrix trace deviates from 1");
  }
  for (int j = 0; j < rho.dim; ++j) {
    if (m(j, j).real() < -1e-10) {
      throw InternalConsistencyError("density matrix has a negative population");
    }
  }
  if (full_check) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
      throw InternalConsistencyError("density matrix is not positive semidefinite");
    }
  }
}

Observables observables(const DensityMatrix& rho) {
  const Matrix& m = rho.entries;
  const int n = rho.dim;
  Observables obs;
  for (int j = 0; j < n; ++j) {
    obs.n += double(j) * m(j, j).real();
  }
  for (int j = 0; j + 2 < n; ++j) {
    obs.psi += std::sqrt(double(j + 1) * double(j + 2)) * m(j + 2, j);
  }
  obs.trace = m.trace().real();
  obs.purity = m.squaredNorm();
  obs.edge_weight = edge_population(m, 3);
  return obs;
}

TruncationReport check_truncation(const DensityMatrix& rho, int top_levels, double tol) {
  if (top_levels >= rho.dim) {
    throw InvalidParameterError("check_truncation: top_levels must be < cutoff");
  }
  const double edge = edge_population(rho.entries, top_levels);
  return {edge, tol, top_levels, edge < tol};
}

int suggest_cutoff(const EffectiveParams& params) {
  const double m = params.g / (2.0 * params.gamma);
  return std::max(16, static_cast<int>(std::ceil(4.0 * m + 10.0 * std::sqrt(m))));
}

double generator_residual(const EffectiveParams& params, const DensityMatrix& rho) {
  const TwoPhotonRhs rhs(params, rho.dim);
  return trace_norm_hermitian(rhs(rho.entries)) / trace_norm_hermitian(rho.entries);
}

Trajectory evolve(const DensityMatrix& rho0, const EffectiveParams& params,
                  const EvolveConfig& config) {
  validate_density(rho0);
  if (!(config.t_max > 0.0)) {
    throw InvalidParameterError("t_max must be > 0");
  }
  const int n = rho0.dim;
  if (n < 3) {
    throw InvalidCutoffError("evolve requires a cutoff of at least 3");
  }
  const TwoPhotonRhs rhs(params, n);

  Trajectory traj;
  traj.params = params;
  traj.cutoff = n;

  Rk45Options opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol;

  const auto err_ratio = [&](const Matrix& e, const Matrix& y0, const Matrix& y1) {
    return matrix_err_ratio(e, y0, y1, config.rel_tol, config.abs_tol);
  };

  Matrix rho = rho0.entries;
  const int samples = std::max(config.samples, 2);

  const auto record = [&](double t) {
    track_conservation(traj.conservation, rho);
    DensityMatrix snap{n, rho};
    if (config.validate_recorded) {
      try {
        validate_density(snap, config.full_positivity_check);
      } catch (const InternalConsistencyError& e) {
        throw IntegrationError(std::string("recorded state failed validation: ") + e.what(), t);
      }
    }
    if (edge_population(rho, 3) >= config.truncation_tol) {
      throw TruncationError("Fock cutoff inadequate during evolution",
                            edge_population(rho, 3),
                            static_cast<int>(std::ceil(1.5 * n)));
    }
    traj.times.push_back(t);
    traj.values.push_back(observables(snap));
  };

  record(0.0);
  for (int i = 1; i < samples; ++i) {
    const double t0 = config.t_max * (i - 1) / (samples - 1);
    const double t1 = config.t_max * i / (samples - 1);
    const auto s = integrate_rk45(rhs, err_ratio, rho, t0, t1, opt,
                                  [](double, const Matrix&) {});
    opt.dt_init = s.dt_last;
    traj.stats.steps += s.steps;
    traj.stats.rejected += s.rejected;
    traj.stats.dt_last = s.dt_last;
    record(t1);
  }
  traj.final_residual = trace_norm_hermitian(rhs(rho)) / trace_norm_hermitian(rho);
  return traj;
}

SteadyReport steady_state_evolve(const EffectiveParams& params, int cutoff,
                                 const SteadyConfig& config) {
  if (cutoff < 3) {
    throw InvalidCutoffError("steady_state_evolve requires a cutoff of at least 3");
  }
  const TwoPhotonRhs rhs(params, cutoff);

  Rk45Options opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol;
  const auto err_ratio = [&](const Matrix& e, const Matrix& y0, const Matrix& y1) {
    return matrix_err_ratio(e, y0, y1, config.rel_tol, config.abs_tol);
  };

  SteadyReport report;
  report.method = SteadyMethod::evolve;

  Matrix rho = vacuum_state(cutoff).entries;
  double t = 0.0;
  double residual = trace_norm_hermitian(rhs(rho)) / trace_norm_hermitian(rho);
  track_conservation(report.conservation, rho);

  while (residual > config.residual_tol && t < config.t_cap) {
    const double t_next = std::min(t + config.check_interval, config.t_cap);
    const auto s = integrate_rk45(rhs, err_ratio, rho, t, t_next, opt,
                                  [](double, const Matrix&) {});
    opt.dt_init = s.dt_last;
    report.stats.steps += s.steps;
    report.stats.rejected += s.rejected;
    report.stats.dt_last = s.dt_last;
    t = t_next;
    residual = trace_norm_hermitian(rhs(rho)) / trace_norm_hermitian(rho);
    track_conservation(report.conservation, rho);
  }
  if (residual > config.residual_tol) {
    throw NotConvergedError(
        "steady_state_evolve: residual above tolerance at t_cap "
        "(critical slowing down? raise t_cap)",
        residual, t);
  }

  report.state = DensityMatrix{cutoff, std::move(rho)};
  validate_density(report.state);
  report.obs = observables(report.state);
  report.residual = residual;
  report.t_reached = t;
  const auto trunc = check_truncation(report.state, 3, config.truncation_tol);
  report.truncation_ok = trunc.adequate;
  report.edge_weight = trunc.edge_weight;
  return report;
}

namespace {

// Appends coeff * (left . rho . right) to the vectorized generator,
// column-major vec: index(r, c) = c*M + r.
void append_product_term(std::vector<Eigen::Triplet<Complex>>& trips,
                         const Matrix& left, const Matrix& right, Complex coeff) {
  const int m = static_cast<int>(left.rows());
  for (int r = 0; r < m; ++r) {
    for (int rp = 0; rp < m; ++rp) {
      const Complex lv = left(rp, r);
      if (lv == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < m; ++c) {
        for (int cp = 0; cp < m; ++cp) {
          const Complex rv = right(c, cp);
          if (rv == Complex(0.0, 0.0)) continue;
          trips.emplace_back(cp * m + rp, c * m + r, coeff * lv * rv);
        }
      }
    }
  }
}

}  // namespace

SteadyReport steady_state_direct(const EffectiveParams& params, int cutoff) {
  if (cutoff < 4) {
    throw InvalidCutoffError("steady_state_direct requires a cutoff of at least 4");
  }
  const int m = (cutoff + 1) / 2;  // even Fock levels 0, 2, ..., 2(m-1)

  // Block restrictions of a^2, a^+a and H to the even-parity sector.
  Matrix a2 = Matrix::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double lvl = 2.0 * k;
    a2(k - 1, k) = std::sqrt(lvl * (lvl - 1.0));
  }
  Matrix num = Matrix::Zero(m, m);
  for (int k = 0; k < m; ++k) num(k, k) = 2.0 * k;
  const Matrix h = params.delta * num +
                   Complex(0.0, 0.5) * params.g * (a2.transpose() - a2);
  const Matrix dis = a2.transpose() * a2;
  const Matrix id = Matrix::Identity(m, m);

  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(16) * m * m);
  append_product_term(trips, h, id, Complex(0.0, -1.0));
  append_product_term(trips, id, h, Complex(0.0, 1.0));
  append_product_term(trips, a2, a2.transpose(), Complex(2.0 * params.gamma, 0.0));
  append_product_term(trips, dis, id, Complex(-params.gamma, 0.0));
  append_product_term(trips, id, dis, Complex(-params.gamma, 0.0));

  // Swap the redundant (0,0) equation for the unit-trace constraint.
  std::erase_if(trips, [](const auto& t) { return t.row() == 0; });
  for (int k = 0; k < m; ++k) {
    trips.emplace_back(0, k * m + k, Complex(1.0, 0.0));
  }

  Eigen::SparseMatrix<Complex> lin(m * m, m * m);
  lin.setFromTriplets(trips.begin(), trips.end());
  lin.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu;
  lu.compute(lin);
  if (lu.info() != Eigen::Success) {
    throw SolverError("steady_state_direct: factorization failed (generator singular "
                      "on the even block?)");
  }
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m * m);
  b(0) = 1.0;
  Eigen::VectorXcd x = lu.solve(b);
  for (int it = 0; it < 3; ++it) {
    Eigen::VectorXcd r = b - lin * x;
    if (r.cwiseAbs().maxCoeff() < 1e-14) break;
    x += lu.solve(r);
  }

  Matrix block = Eigen::Map<Matrix>(x.data(), m, m);
  block = 0.5 * (block + block.adjoint()).eval();
  const double tr = block.trace().real();
  if (!(std::isfinite(tr)) || std::abs(tr) < 1e-12) {
    throw SolverError("steady_state_direct: solution has a degenerate trace");
  }
  block /= tr;

  DensityMatrix state{cutoff, Matrix::Zero(cutoff, cutoff)};
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      state.entries(2 * r, 2 * c) = block(r, c);
    }
  }

  SteadyReport report;
  report.method = SteadyMethod::direct;
  report.residual = generator_residual(params, state);
  if (report.residual > 1e-10) {
    throw InternalConsistencyError(
        "steady_state_direct: generator residual " + std::to_string(report.residual) +
        " exceeds 1e-10 after refinement");
  }
  validate_density(state);
  report.obs = observables(state);
  const auto trunc = check_truncation(state, 3, 1e-8);
  report.truncation_ok = trunc.adequate;
  report.edge_weight = trunc.edge_weight;
  report.state = std::move(state);
  return report;
}

SteadyReport steady_state_auto(const EffectiveParams& params,
                               const AutoSteadyConfig& config) {
  int cutoff = config.cutoff > 0 ? config.cutoff : suggest_cutoff(params);
  for (int attempt = 0;; ++attempt) {
    const int block = (cutoff + 1) / 2;
    const bool use_direct = static_cast<long>(block) * block <= config.direct_unknown_limit;
    SteadyReport report;
    try {
      report = use_direct ? steady_state_direct(params, cutoff)
                          : steady_state_evolve(params, cutoff, config.steady);
    } catch (const TruncationError&) {
      if (attempt >= config.max_retries) throw;
      cutoff = static_cast<int>(std::ceil(1.5 * cutoff));
      continue;
    }
    const auto trunc = check_truncation(report.state, 3, config.steady.truncation_tol);
    report.truncation_ok = trunc.adequate;
    report.edge_weight = trunc.edge_weight;
    if (report.truncation_ok || attempt >= config.max_retries) {
      if (!report.truncation_ok) {
        throw TruncationError("steady_state_auto: cutoff inadequate after retries",
                              report.edge_weight,
                              static_cast<int>(std::ceil(1.5 * cutoff)));
      }
      return report;
    }
    cutoff = static_cast<int>(std::ceil(1.5 * cutoff));
  }
}

}  // namespace dpt
