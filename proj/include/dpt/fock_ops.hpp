// fock_ops.hpp — bosonic operators, effective Hamiltonian and Lindblad
// right-hand side on a truncated Fock basis, plus the conversion from
// physical circuit parameters to the effective (g, gamma, delta) triple.
#pragma once

#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "dpt/errors.hpp"

namespace dpt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Relative tolerance for Hermiticity checks throughout the library.
// Violations above it are hard errors, not warnings.
inline constexpr double kHermTol = 1e-12;

// Raw circuit parameters of the two-cavity device. Angular frequencies,
// amplitudes and rates share one time unit.
struct PhysicalParams {
  double omega_s = 0.0;  // storage mode frequency
  double omega_r = 0.0;  // readout mode frequency
  double omega_p = 0.0;  // nonresonant pump frequency
  double eps_r = 0.0;    // resonant drive amplitude
  double eps_p = 0.0;    // nonresonant pump amplitude
  double kappa = 0.0;    // readout single-photon loss rate, > 0
  double chi_rs = 0.0;   // cross-Kerr coupling
};

// Effective model parameters in the canonical phase convention: g real and
// non-negative. The model degenerates at gamma = 0, which is rejected.
struct EffectiveParams {
  double g = 0.0;      // two-photon pump rate, >= 0
  double gamma = 1.0;  // two-photon dissipation rate, > 0
  double delta = 0.0;  // frequency detuning, any sign

  EffectiveParams() = default;
  EffectiveParams(double g_, double gamma_, double delta_);
};

// Conversion result before the phase gauge is fixed: g may be complex.
struct EffectiveDerivation {
  Complex g;
  double gamma = 0.0;
  double delta = 0.0;

  // Rotates the Fock-basis phase (a -> a e^{i theta/2}) so that g becomes
  // real non-negative. Returns the canonical parameters and the angle.
  std::pair<EffectiveParams, double> normalized() const;
};

// g = 2 xi chi_rs eps_r / kappa, gamma = |xi chi_rs|^2 / 2 kappa,
// delta = (2 omega_s - omega_p - omega_r) / 2, with the pump treated as a
// classical field of amplitude xi = -i eps_p / [kappa/2 + i(omega_r - omega_p)].
EffectiveDerivation derive_effective(const PhysicalParams& p);

// Dense operator on the first `dim` Fock states |0> ... |dim-1>.
struct TruncatedOperator {
  int dim = 0;
  Matrix entries;
  std::string label;
};

bool is_hermitian(const Matrix& m, double rtol = kHermTol);

TruncatedOperator annihilation(int cutoff);  // <n-1|a|n> = sqrt(n)
TruncatedOperator a_squared(int cutoff);
TruncatedOperator number_op(int cutoff);

// H = delta a^+a + (i/2)(g a^+2 - g* a^2). The result is verified Hermitian.
TruncatedOperator build_heff(const EffectiveParams& params, int cutoff);

enum class ParitySector { even, odd };

// Diagonal projector onto even or odd Fock states.
TruncatedOperator parity_projector(int cutoff, ParitySector sector);

// Reference right-hand side of the master equation
//   d rho/dt = -i[H, rho] + 2 gamma D[a^2](rho),
//   D[X](rho) = X rho X^+ - (X^+X rho + rho X^+X)/2.
// Deliberately literal and dense; the evolution engine carries an
// equivalent banded kernel for the hot path. The output is checked to be
// traceless and Hermitian before it is returned.
Matrix lindblad_rhs(const EffectiveParams& params, const Matrix& rho);

}  // namespace dpt
