// Shared fixtures: random density matrices, cat states and exact quartic
// moments used as oracles across the test suites.
#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "dpt/fock_ops.hpp"
#include "dpt/lindblad_engine.hpp"

namespace dpt::testing {

// Random Hermitian, positive-semidefinite, unit-trace matrix supported on
// the first `support` levels of an N-level space (support = 0: full).
inline DensityMatrix random_density(int cutoff, unsigned seed, int support = 0) {
  if (support <= 0 || support > cutoff) support = cutoff;
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  Matrix m = Matrix::Zero(cutoff, cutoff);
  for (int j = 0; j < support; ++j) {
    for (int k = 0; k < support; ++k) {
      m(j, k) = Complex(dist(rng), dist(rng));
    }
  }
  Matrix rho = m * m.adjoint();
  rho /= rho.trace().real();
  return {cutoff, std::move(rho)};
}

// Normalized even Schroedinger cat (|alpha> + |-alpha>) / norm, alpha real.
inline DensityMatrix even_cat_state(double alpha, int cutoff) {
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(cutoff);
  double log_fact = 0.0;
  for (int mlev = 0; mlev < cutoff; ++mlev) {
    if (mlev > 0) log_fact += std::log(double(mlev));
    if (mlev % 2 == 0) {
      amp(mlev) = std::exp(mlev * std::log(alpha) - 0.5 * log_fact);
    }
  }
  amp /= amp.norm();
  Matrix rho = amp * amp.adjoint();
  return {cutoff, std::move(rho)};
}

// Exact quartic moments of rho, used by the moment-consistency oracle.
inline double moment_adag2_a2(const Matrix& rho) {
  double v = 0.0;
  for (int j = 0; j < rho.rows(); ++j) {
    v += double(j) * double(j - 1) * rho(j, j).real();
  }
  return v;
}

inline Complex moment_2n_plus_1_a2(const Matrix& rho) {
  // <(2 a^+a + 1) a^2> = sum_j (2j+1) sqrt((j+1)(j+2)) rho_{j+2, j}
  Complex v = 0.0;
  for (int j = 0; j + 2 < rho.rows(); ++j) {
    v += (2.0 * j + 1.0) * std::sqrt(double(j + 1) * double(j + 2)) * rho(j + 2, j);
  }
  return v;
}

inline Complex moment_a2(const Matrix& rho) {
  Complex v = 0.0;
  for (int j = 0; j + 2 < rho.rows(); ++j) {
    v += std::sqrt(double(j + 1) * double(j + 2)) * rho(j + 2, j);
  }
  return v;
}

inline double moment_n(const Matrix& rho) {
  double v = 0.0;
  for (int j = 0; j < rho.rows(); ++j) {
    v += double(j) * rho(j, j).real();
  }
  return v;
}

}  // namespace dpt::testing
