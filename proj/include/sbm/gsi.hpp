#pragma once

// Ground state across excitation blocks and the level crossings
// (ground-state instabilities) between consecutive blocks.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sbm/excitation.hpp"
#include "sbm/model.hpp"

namespace sbm {

/// Which couplings a scalar κ sweep drives.
enum class CouplingAxis {
  tied,    ///< every coupling equals κ (κ_a = κ_b = κ for two modes)
  mode_a,  ///< κ_a = κ, κ_b held
  mode_b,  ///< κ_b = κ, κ_a held
};

ModelParams with_coupling(const ModelParams& params, double kappa, CouplingAxis axis);

/// The coupling value a sweep along `axis` currently sits at.
double coupling_on_axis(const ModelParams& params, CouplingAxis axis);

struct GroundStateSolution {
  Excitation lambda_star;
  /// λ* + h.
  double energy = 0.0;
  Eigen::VectorXd amplitudes;
  std::vector<BlockBasisState> basis;
};

/// Lowest state of one block.
GroundStateSolution block_ground_state(const ModelParams& params, Excitation lambda);

/// λ + lowest eigenvalue of H_I on block λ.
double block_ground_energy(const ModelParams& params, Excitation lambda);

struct ScanOptions {
  /// Consecutive increases of the block minimum that end the scan...
  int increase_streak = 3;
  /// ...followed by this many extra blocks.
  int margin = 5;
  /// Hard cap on scanned blocks before SearchFailure.
  int max_blocks = 20000;
  /// Energies closer than this tie; the smaller λ wins.
  double tie_tolerance = 1e-12;
};

/// Scans λ upward from -N/2 and returns the global minimizer.
GroundStateSolution ground_state_at(const ModelParams& params, const ScanOptions& options = {});

struct CriticalCoupling {
  Excitation lambda_from;
  Excitation lambda_to;
  double kappa_tilde = 0.0;
  /// |E_{λ+1} - E_λ| at kappa_tilde.
  double residual = 0.0;
};

struct BisectionOptions {
  double kappa_tolerance = 1e-10;
  double residual_tolerance = 1e-10;
  /// Lower bracket end; f must be positive here.
  double kappa_floor = 1e-12;
  /// Upper bracket doubles from 1 up to this.
  double kappa_ceiling = 65536.0;
};

/// Root of E_{λ+1}(κ) - E_λ(κ) by bisection. Throws NoCrossing when the
/// bracket has no sign change.
CriticalCoupling find_critical_coupling(const ModelParams& params, Excitation lambda_from,
                                        CouplingAxis axis = CouplingAxis::tied,
                                        const BisectionOptions& options = {});

/// √((1 + r)/N), the crossing between the two lowest blocks.
double first_critical_analytic(int n_spins, double r);

struct GsiSequence {
  /// Ground-state block at zero swept coupling; the sequence begins here.
  Excitation start;
  std::vector<CriticalCoupling> crossings;
};

/// Crossings λ -> λ+1 for λ from the observed start up to `lambda_max`
/// inclusive. Throws CertificationFailure if κ̃ is not strictly increasing.
GsiSequence gsi_sequence(const ModelParams& params, Excitation lambda_max,
                         CouplingAxis axis = CouplingAxis::tied);

struct PhaseDiagram {
  std::vector<double> r_values;
  /// One crossing list per r, all starting at λ = -N/2.
  std::vector<std::vector<CriticalCoupling>> boundaries;
};

/// Single-mode boundaries κ̃_λ(r) for λ = -N/2 .. lambda_max.
PhaseDiagram phase_diagram(int n_spins, std::span<const double> r_grid, Excitation lambda_max);

struct CertificationEntry {
  Excitation lambda;
  /// 1, 2 or 3 for the monotone-energy, single-crossing and ordering checks;
  /// 0 for strict increase of the whole κ̃ sequence.
  int condition = 0;
  bool passed = false;
  std::string detail;
};

struct CertificationReport {
  std::vector<CertificationEntry> entries;
  std::vector<CriticalCoupling> crossings;

  bool all_passed() const;
  bool passed(int condition) const;
};

/// Numerical check that crossings happen in sequence:
///  (1) each E_λ, λ > -N/2, is non-increasing in κ,
///  (2) E_{λ+1} - E_λ decreases in κ and changes sign exactly once,
///  (3) E_{λ+2} > E_{λ+1} at κ̃_λ.
/// Failures are recorded in the report, never thrown.
CertificationReport certify_sequential_gsi(const ModelParams& params, Excitation lambda_max,
                                           int grid_points = 800);

struct DetuningOrdering {
  double kappa_negative = 0.0;
  double kappa_resonant = 0.0;
  double kappa_positive = 0.0;
  bool negative_below_resonant = false;
  bool resonant_below_positive = false;

  bool holds() const { return negative_below_resonant && resonant_below_positive; }
};

/// Compares the i-th crossing (i = 1 is λ = -N/2 -> -N/2 + 1) at r_neg < 0,
/// r = 0 and r_pos > 0 for the single-mode model.
DetuningOrdering verify_detuning_ordering(int n_spins, int index, double r_negative,
                                          double r_positive);

}  // namespace sbm
