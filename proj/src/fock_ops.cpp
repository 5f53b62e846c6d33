#include "dpt/fock_ops.hpp"

#include <cmath>

namespace dpt {

namespace {

bool all_finite(const PhysicalParams& p) {
  return std::isfinite(p.omega_s) && std::isfinite(p.omega_r) &&
         std::isfinite(p.omega_p) && std::isfinite(p.eps_r) &&
         std::isfinite(p.eps_p) && std::isfinite(p.kappa) &&
         std::isfinite(p.chi_rs);
}

void require_cutoff(int cutoff, int min_dim, const char* what) {
  if (cutoff < min_dim) {
    throw InvalidCutoffError(std::string(what) + " requires a Fock cutoff of at least " +
                             std::to_string(min_dim) + ", got " + std::to_string(cutoff));
  }
}

}  // namespace

EffectiveParams::EffectiveParams(double g_, double gamma_, double delta_)
    : g(g_), gamma(gamma_), delta(delta_) {
  if (!(std::isfinite(g) && std::isfinite(gamma) && std::isfinite(delta))) {
    throw InvalidParameterError("effective parameters must be finite");
  }
  if (g < 0.0) {
    throw InvalidParameterError("two-photon pump rate g must be >= 0 in the canonical gauge");
  }
  if (gamma <= 0.0) {
    throw DegenerateModelError("two-photon dissipation rate gamma must be > 0");
  }
}

std::pair<EffectiveParams, double> EffectiveDerivation::normalized() const {
  const double theta = (g == Complex(0.0, 0.0)) ? 0.0 : std::arg(g);
  return {EffectiveParams(std::abs(g), gamma, delta), theta};
}

EffectiveDerivation derive_effective(const PhysicalParams& p) {
  if (!all_finite(p)) {
    throw InvalidParameterError("physical parameters must be finite");
  }
  if (p.kappa <= 0.0) {
    throw InvalidParameterError("readout loss rate kappa must be > 0");
  }
  const Complex xi = Complex(0.0, -1.0) * p.eps_p /
                     Complex(p.kappa / 2.0, p.omega_r - p.omega_p);
  EffectiveDerivation d;
  d.g = 2.0 * xi * p.chi_rs * p.eps_r / p.kappa;
  d.gamma = std::norm(xi * p.chi_rs) / (2.0 * p.kappa);
  d.delta = (2.0 * p.omega_s - p.omega_p - p.omega_r) / 2.0;
  if (d.gamma == 0.0) {
    throw DegenerateModelError(
        "derived gamma = 0 (eps_p * chi_rs vanishes); the two-photon dissipation channel is absent");
  }
  return d;
}

bool is_hermitian(const Matrix& m, double rtol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rtol * scale;
}

TruncatedOperator annihilation(int cutoff) {
  require_cutoff(cutoff, 2, "annihilation");
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return {cutoff, std::move(a), "a"};
}

TruncatedOperator a_squared(int cutoff) {
  require_cutoff(cutoff, 3, "a_squared");
  const Matrix a = annihilation(cutoff).entries;
  return {cutoff, a * a, "a^2"};
}

TruncatedOperator number_op(int cutoff) {
  require_cutoff(cutoff, 2, "number_op");
  Matrix n = Matrix::Zero(cutoff, cutoff);
  for (int m = 0; m < cutoff; ++m) {
    n(m, m) = static_cast<double>(m);
  }
  return {cutoff, std::move(n), "a^+a"};
}

TruncatedOperator build_heff(const EffectiveParams& params, int cutoff) {
  require_cutoff(cutoff, 3, "build_heff");
  const Matrix a2 = a_squared(cutoff).entries;
  const Complex g(params.g, 0.0);
  Matrix h = params.delta * number_op(cutoff).entries +
             Complex(0.0, 0.5) * (g * a2.adjoint() - std::conj(g) * a2);
  if (!is_hermitian(h)) {
    throw InternalConsistencyError("effective Hamiltonian failed the Hermiticity check");
  }
  return {cutoff, std::move(h), "H_eff"};
}

TruncatedOperator parity_projector(int cutoff, ParitySector sector) {
  require_cutoff(cutoff, 2, "parity_projector");
  Matrix p = Matrix::Zero(cutoff, cutoff);
  const int start = (sector == ParitySector::even) ? 0 : 1;
  for (int m = start; m < cutoff; m += 2) {
    p(m, m) = 1.0;
  }
  return {cutoff, std::move(p), sector == ParitySector::even ? "P_even" : "P_odd"};
}

Matrix lindblad_rhs(const EffectiveParams& params, const Matrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw ShapeError("density matrix must be square");
  }
  const int dim = static_cast<int>(rho.rows());
  require_cutoff(dim, 3, "lindblad_rhs");

  const Matrix h = build_heff(params, dim).entries;
  const Matrix a2 = a_squared(dim).entries;
  const Matrix a2d = a2.adjoint();
  const Matrix d = a2d * a2;

  Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
  out += 2.0 * params.gamma * (a2 * rho * a2d);
  out -= params.gamma * (d * rho + rho * d);

  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if (std::abs(out.trace()) > kHermTol * dim * scale) {
    throw InternalConsistencyError("Lindblad right-hand side is not traceless");
  }
  if (is_hermitian(rho) && !is_hermitian(out)) {
    throw InternalConsistencyError("Lindblad right-hand side lost Hermiticity");
  }
  return out;
}

}  // namespace dpt
