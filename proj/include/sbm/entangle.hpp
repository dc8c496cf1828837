#pragma once

// Spin entanglement of ground states: partial trace over the boson modes,
// Wootters concurrence, pairwise concurrence of symmetric N-spin states, and
// concurrence profiles along a coupling sweep.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sbm/excitation.hpp"
#include "sbm/gsi.hpp"
#include "sbm/model.hpp"

namespace sbm {

/// Product basis order |↑↑>, |↑↓>, |↓↑>, |↓↓>.
struct TwoQubitDensityMatrix {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  /// Only ρ11, ρ44 and ρ22 = ρ33 = ρ23 = ρ32 are nonzero.
  bool is_werner_form = false;

  /// Wraps a matrix and detects the Werner structure.
  static TwoQubitDensityMatrix from_matrix(const Eigen::Matrix4cd& rho);
};

/// Spin part of a ground state in the Dicke basis |N/2, m>, index k = N/2 - m,
/// after tracing out every photon label.
Eigen::MatrixXd spin_density_dicke(const GroundStateSolution& solution, int n_spins);

/// Partial trace over the boson modes of an N = 2 ground state.
TwoQubitDensityMatrix reduced_spin_rdm(const GroundStateSolution& solution, int n_spins = 2);

/// 2 max(ρ22 - √(ρ11 ρ44), 0). ContractViolation unless `is_werner_form`.
double werner_concurrence_fast(const TwoQubitDensityMatrix& rho);

/// max(0, ξ1 - ξ2 - ξ3 - ξ4) with ξ the singular values of √ρ √ρ̃, i.e. the
/// square roots of the spectrum of the Hermitian √ρ ρ̃ √ρ. InvalidState when
/// the trace is off by more than 1e-9 or an eigenvalue is below -1e-9.
double wootters_concurrence(const TwoQubitDensityMatrix& rho);

/// Two-spin reduced state of the mixture Σ p_k |N/2, N/2 - k><...|.
/// `populations` has N + 1 entries, k = 0 being all spins up.
TwoQubitDensityMatrix dicke_pairwise_rdm(int n_spins, std::span<const double> populations);

/// Pairwise concurrence of a ground state (N >= 2).
double spin_concurrence(const GroundStateSolution& solution, int n_spins);

struct KappaRange {
  double lo = 0.0;
  double hi = 1.0;
  int samples = 2;

  /// Evenly spaced, both ends included.
  std::vector<double> points() const;
};

enum class KinkKind {
  slope_jump,
  clamp_onset,    ///< C drops to exactly 0
  clamp_release,  ///< C leaves 0
};

struct Kink {
  double kappa = 0.0;
  KinkKind kind = KinkKind::slope_jump;
};

struct ConcurrenceProfile {
  std::vector<double> kappa_samples;
  std::vector<double> c_values;
  std::vector<Excitation> lambda_star;
  std::vector<double> energies;
  /// Level crossings inside the sampled range.
  std::vector<double> gsi_markers;
  /// Non-smooth points that are not level crossings.
  std::vector<Kink> kink_markers;
};

/// Ground state, energy and concurrence at every sample of `range`, with the
/// crossings and kinks inside it.
ConcurrenceProfile concurrence_profile(const ModelParams& params, const KappaRange& range,
                                       CouplingAxis axis = CouplingAxis::tied);

/// Kinks: a second difference above 50x its local median (floor 1e-10), or a
/// step to/from exact zero. Samples within two spacings of a GSI are skipped.
std::vector<Kink> detect_concurrence_kinks(const ConcurrenceProfile& profile,
                                           std::span<const double> gsi_markers);

struct ClampTransition {
  double kappa = 0.0;
  KinkKind kind = KinkKind::clamp_onset;
  bool at_gsi = false;
};

/// Every place where C steps to or from exact zero, GSI-coincident or not.
std::vector<ClampTransition> clamp_transitions(const ConcurrenceProfile& profile,
                                               std::span<const double> gsi_markers);

struct RegionMaximum {
  double concurrence = 0.0;
  double kappa = 0.0;
  double region_lo = 0.0;
  double region_hi = 0.0;
};

/// Maximum of the block-λ ground-state concurrence over [κ̃_{λ-1}, κ̃_λ]
/// (from 0 when λ opens the sequence). 256-point grid, then golden-section
/// refinement to 1e-8 in κ. DomainError for an empty region.
RegionMaximum maximize_region_concurrence(const ModelParams& params, Excitation lambda,
                                          CouplingAxis axis = CouplingAxis::tied);

double region_max_concurrence(const ModelParams& params, Excitation lambda,
                              CouplingAxis axis = CouplingAxis::tied);

}  // namespace sbm
