#pragma once

// Exact two-spin (j = 1), single-mode results: block energies, lowest
// eigenvectors and the ground-state concurrence on each excitation block.
// All functions take integer λ because N = 2 has only integer blocks.

#include <vector>

namespace sbm {

struct ClosedFormAuxiliaries {
  double alpha = 0.0;  ///< (4λ+2)κ² + r²
  double phi = 0.0;    ///< arccos(3√3 κ² r / α^{3/2}), principal branch [0, π]
  double theta = 0.0;  ///< (π - φ)/3
  double zeta = 0.0;   ///< cos θ
  int tau = 1;         ///< 1 + 2λ
};

/// Requires α > 0, i.e. not (κ = 0 and r = 0).
ClosedFormAuxiliaries closed_form_auxiliaries(int lambda, double r, double kappa);

/// Lowest energy of block λ >= -1 (E = λ + h).
double energy_closed(int lambda, double r, double kappa);

/// Lowest block eigenvector written as in the analytic solution: for λ = 0
/// the amplitudes over (|0>|0>, |-1>|1>) are (a0, 1); for λ >= 1 over
/// (|1>|λ-1>, |0>|λ>, |-1>|λ+1>) they are (a_λ, b_λ, 1).
///
/// These amplitudes use the κ -> -κ phase convention, so they agree with the
/// numerical eigenvector of the +κ block only after flipping the sign of
/// odd-photon-number components.
struct ClosedFormEigenvector {
  int lambda = 0;
  std::vector<double> amplitudes;
  /// 1 / ||amplitudes||.
  double normalization = 1.0;

  std::vector<double> normalized() const;
};

ClosedFormEigenvector eigenvector_closed(int lambda, double r, double kappa);

/// Concurrence of the λ = 0 ground state.
double c0_closed(double r, double kappa);

/// 2(ρ22 - √(ρ11 ρ44)) of the λ >= 1 state before clamping; may be negative.
double clambda_closed_raw(int lambda, double r, double kappa);

/// max(0, clambda_closed_raw).
double clambda_closed(int lambda, double r, double kappa);

/// On resonance the block eigenstates do not depend on κ and
/// C_λ = (√(1+λ) - √λ)² / (2(1+2λ)).
double clambda_resonant(int lambda);

}  // namespace sbm
