#pragma once

// Conserved-excitation blocks of the detuned spin-boson Hamiltonian.
//
// With H0 = Jz + a†a (+ b†b) and energies in units of the spin splitting,
// the interaction part
//
//   H_I = r a†a + κ (J+ a + J- a†)                            (one mode)
//   H_I = r_a a†a + r_b b†b + Σ_x κ_x (J+ x + J- x†)          (two modes)
//
// commutes with H0, so it is block diagonal in the excitation number
// λ = m + n_a (+ n_b). Only the symmetric sector j = N/2 is built.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sbm/excitation.hpp"

namespace sbm {

struct SecondMode {
  double detuning_rb = 0.0;
  double coupling_kappa_b = 0.0;
};

struct ModelParams {
  int n_spins = 2;
  /// Single-mode detuning r = ω/ω0 - 1.
  double detuning_r = 0.0;
  /// κ = g/ω0; for two-mode models this is κ_a.
  double coupling_kappa = 0.0;
  std::optional<SecondMode> second_mode;
  /// Mode-a detuning, used only when `second_mode` is present.
  double first_mode_detuning_ra = 0.0;

  static ModelParams single_mode(int n_spins, double r, double kappa);
  static ModelParams two_mode(int n_spins, double ra, double rb, double kappa_a, double kappa_b);

  bool is_two_mode() const { return second_mode.has_value(); }
  int n_modes() const { return is_two_mode() ? 2 : 1; }

  /// Throws DomainError unless N >= 1, every detuning > -1 and every coupling >= 0.
  void validate() const;
};

struct BlockBasisState {
  int twice_m = 0;
  /// One entry per boson mode.
  std::vector<int> photon_numbers;

  double spin_m() const { return 0.5 * twice_m; }
  int total_photons() const;

  bool operator==(const BlockBasisState&) const = default;
};

struct ExcitationBlock {
  Excitation lambda;
  std::vector<BlockBasisState> basis;
  Eigen::MatrixXd matrix;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Tridiagonal single-mode block, basis ordered by ascending photon number.
ExcitationBlock build_single_mode_block(const ModelParams& params, Excitation lambda);

/// Two-mode block, basis ordered by descending m, then descending n_a.
ExcitationBlock build_two_mode_block(const ModelParams& params, Excitation lambda);

/// Dispatches on `params.is_two_mode()`.
ExcitationBlock build_block(const ModelParams& params, Excitation lambda);

int block_dimension(const ModelParams& params, Excitation lambda);

/// R_x = x (N + 1 - x), zero for x <= 0.
double ladder_weight(int n_spins, int x);

}  // namespace sbm
