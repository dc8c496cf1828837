#include "sbm/gsi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sbm/eig.hpp"
#include "sbm/errors.hpp"

namespace sbm {
namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

}  // namespace

ModelParams with_coupling(const ModelParams& params, double kappa, CouplingAxis axis) {
  ModelParams out = params;
  switch (axis) {
    case CouplingAxis::tied:
      out.coupling_kappa = kappa;
      if (out.second_mode) out.second_mode->coupling_kappa_b = kappa;
      break;
    case CouplingAxis::mode_a:
      out.coupling_kappa = kappa;
      break;
    case CouplingAxis::mode_b:
      if (!out.second_mode) throw ContractViolation("mode_b sweep needs a two-mode model");
      out.second_mode->coupling_kappa_b = kappa;
      break;
  }
  return out;
}

double coupling_on_axis(const ModelParams& params, CouplingAxis axis) {
  if (axis == CouplingAxis::mode_b) {
    if (!params.second_mode) throw ContractViolation("mode_b sweep needs a two-mode model");
    return params.second_mode->coupling_kappa_b;
  }
  return params.coupling_kappa;
}

GroundStateSolution block_ground_state(const ModelParams& params, Excitation lambda) {
  ExcitationBlock block = build_block(params, lambda);
  Eigenpair pair = lowest_eigenpair(block.matrix);
  return {lambda, lambda.value() + pair.value, std::move(pair.vector), std::move(block.basis)};
}

double block_ground_energy(const ModelParams& params, Excitation lambda) {
  const ExcitationBlock block = build_block(params, lambda);
  return lambda.value() + lowest_eigenpair(block.matrix).value;
}

GroundStateSolution ground_state_at(const ModelParams& params, const ScanOptions& options) {
  params.validate();
  Excitation lambda = Excitation::lowest(params.n_spins);
  GroundStateSolution best = block_ground_state(params, lambda);
  double previous = best.energy;
  int streak = 0;
  int since_trigger = -1;

  for (int scanned = 1; scanned < options.max_blocks; ++scanned) {
    lambda = lambda.next();
    GroundStateSolution candidate = block_ground_state(params, lambda);
    const double energy = candidate.energy;
    if (energy < best.energy - options.tie_tolerance) {
      best = std::move(candidate);
      since_trigger = -1;
    }
    streak = energy > previous ? streak + 1 : 0;
    previous = energy;
    if (since_trigger >= 0) {
      ++since_trigger;
    } else if (streak >= options.increase_streak) {
      since_trigger = 0;
    }
    if (since_trigger >= options.margin) return best;
  }
  throw SearchFailure("ground-state scan reached " + std::to_string(options.max_blocks) +
                      " blocks without the block energies turning upward");
}

CriticalCoupling find_critical_coupling(const ModelParams& params, Excitation lambda_from,
                                        CouplingAxis axis, const BisectionOptions& options) {
  params.validate();
  const Excitation lambda_to = lambda_from.next();
  auto gap = [&](double kappa) {
    const ModelParams p = with_coupling(params, kappa, axis);
    return block_ground_energy(p, lambda_to) - block_ground_energy(p, lambda_from);
  };

  double lo = options.kappa_floor;
  const double gap_lo = gap(lo);
  if (!(gap_lo > 0.0)) {
    throw NoCrossing("E_" + lambda_to.str() + " - E_" + lambda_from.str() + " = " +
                     describe(gap_lo) + " at kappa = " + describe(lo) +
                     "; block " + lambda_to.str() + " is not above block " + lambda_from.str());
  }
  double hi = std::min(1.0, options.kappa_ceiling);
  while (gap(hi) > 0.0) {
    if (hi >= options.kappa_ceiling) {
      throw NoCrossing("no sign change of E_" + lambda_to.str() + " - E_" + lambda_from.str() +
                       " below kappa = " + describe(options.kappa_ceiling));
    }
    lo = hi;
    hi = std::min(2.0 * hi, options.kappa_ceiling);
  }

  double kappa = 0.5 * (lo + hi);
  double value = gap(kappa);
  for (int iteration = 0; iteration < 200; ++iteration) {
    if (value == 0.0) break;
    if (value > 0.0) {
      lo = kappa;
    } else {
      hi = kappa;
    }
    if (hi - lo <= options.kappa_tolerance && std::abs(value) <= options.residual_tolerance) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    kappa = mid;
    value = gap(kappa);
  }
  return {lambda_from, lambda_to, kappa, std::abs(value)};
}

double first_critical_analytic(int n_spins, double r) {
  if (n_spins < 1) throw DomainError("n_spins must be >= 1");
  if (!(r > -1.0)) throw DomainError("detuning r must be > -1");
  return std::sqrt((1.0 + r) / n_spins);
}

GsiSequence gsi_sequence(const ModelParams& params, Excitation lambda_max, CouplingAxis axis) {
  params.validate();
  GsiSequence sequence;
  sequence.start = ground_state_at(with_coupling(params, 0.0, axis)).lambda_star;
  for (Excitation lambda = sequence.start; lambda <= lambda_max; lambda = lambda.next()) {
    CriticalCoupling crossing = find_critical_coupling(params, lambda, axis);
    if (!sequence.crossings.empty() &&
        !(crossing.kappa_tilde > sequence.crossings.back().kappa_tilde)) {
      const CriticalCoupling& previous = sequence.crossings.back();
      throw CertificationFailure("crossing " + lambda.str() + " -> " + crossing.lambda_to.str() +
                                 " at kappa = " + describe(crossing.kappa_tilde) +
                                 " does not exceed crossing " + previous.lambda_from.str() +
                                 " -> " + previous.lambda_to.str() + " at kappa = " +
                                 describe(previous.kappa_tilde));
    }
    sequence.crossings.push_back(crossing);
  }
  return sequence;
}

PhaseDiagram phase_diagram(int n_spins, std::span<const double> r_grid, Excitation lambda_max) {
  PhaseDiagram diagram;
  diagram.r_values.assign(r_grid.begin(), r_grid.end());
  diagram.boundaries.reserve(r_grid.size());
  for (double r : r_grid) {
    const ModelParams params = ModelParams::single_mode(n_spins, r, 0.0);
    diagram.boundaries.push_back(gsi_sequence(params, lambda_max).crossings);
  }
  return diagram;
}

bool CertificationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CertificationEntry& e) { return e.passed; });
}

bool CertificationReport::passed(int condition) const {
  return std::all_of(entries.begin(), entries.end(), [&](const CertificationEntry& e) {
    return e.condition != condition || e.passed;
  });
}

CertificationReport certify_sequential_gsi(const ModelParams& params, Excitation lambda_max,
                                           int grid_points) {
  params.validate();
  if (grid_points < 3) throw DomainError("certification grid needs at least 3 points");
  CertificationReport report;
  const Excitation lowest = Excitation::lowest(params.n_spins);
  if (lambda_max < lowest) return report;
  const int n_crossings = lambda_max.steps_above(lowest) + 1;

  double kappa_top = 0.0;
  for (int i = 0; i < n_crossings; ++i) {
    const Excitation lambda = lowest.shifted(i);
    try {
      report.crossings.push_back(find_critical_coupling(params, lambda));
      kappa_top = std::max(kappa_top, report.crossings.back().kappa_tilde);
    } catch (const NoCrossing& e) {
      report.entries.push_back({lambda, 2, false, e.what()});
    }
  }
  if (report.crossings.size() != static_cast<std::size_t>(n_crossings)) return report;
  kappa_top = 2.0 * kappa_top + 0.5;

  // energies[b][i]: block lowest.shifted(b) at grid point i.
  const int n_blocks = n_crossings + 2;
  std::vector<double> grid(grid_points);
  for (int i = 0; i < grid_points; ++i) grid[i] = kappa_top * i / (grid_points - 1);
  std::vector<std::vector<double>> energies(n_blocks, std::vector<double>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const ModelParams p = with_coupling(params, grid[i], CouplingAxis::tied);
    for (int b = 0; b < n_blocks; ++b) energies[b][i] = block_ground_energy(p, lowest.shifted(b));
  }
  auto slack = [](double value) { return 1e-12 * std::max(1.0, std::abs(value)); };

  // (1) monotone block energies.
  report.entries.push_back({lowest, 1, true, "lowest block is constant"});
  for (int b = 1; b < n_blocks; ++b) {
    double worst = 0.0;
    int where = -1;
    for (int i = 0; i + 1 < grid_points; ++i) {
      const double rise = energies[b][i + 1] - energies[b][i];
      if (rise > slack(energies[b][i]) && rise > worst) {
        worst = rise;
        where = i;
      }
    }
    report.entries.push_back(
        {lowest.shifted(b), 1, where < 0,
         where < 0 ? "non-increasing on grid"
                   : "rises by " + describe(worst) + " after kappa = " + describe(grid[where])});
  }

  // (2) single, monotone sign change of the gap.
  for (int b = 0; b < n_crossings; ++b) {
    int sign_changes = 0;
    int increases = 0;
    double previous = energies[b + 1][0] - energies[b][0];
    const double first = previous;
    for (int i = 1; i < grid_points; ++i) {
      const double gap = energies[b + 1][i] - energies[b][i];
      if (gap > previous + slack(previous)) ++increases;
      if ((gap > 0.0) != (previous > 0.0)) ++sign_changes;
      previous = gap;
    }
    const bool ok = increases == 0 && sign_changes == 1 && first > 0.0 && previous < 0.0;
    report.entries.push_back({lowest.shifted(b), 2, ok,
                              "gap " + describe(first) + " -> " + describe(previous) + ", " +
                                  std::to_string(sign_changes) + " sign change(s), " +
                                  std::to_string(increases) + " increase(s)"});
  }

  // (3) next block still above at each crossing.
  for (int b = 0; b < n_crossings; ++b) {
    const CriticalCoupling& crossing = report.crossings[b];
    const ModelParams p = with_coupling(params, crossing.kappa_tilde, CouplingAxis::tied);
    const double margin =
        block_ground_energy(p, lowest.shifted(b + 2)) - block_ground_energy(p, lowest.shifted(b + 1));
    report.entries.push_back({lowest.shifted(b), 3, margin > 0.0,
                              "E_{l+2} - E_{l+1} = " + describe(margin) + " at kappa = " +
                                  describe(crossing.kappa_tilde)});
  }

  // Whole sequence strictly increasing.
  for (std::size_t i = 1; i < report.crossings.size(); ++i) {
    const bool ok = report.crossings[i].kappa_tilde > report.crossings[i - 1].kappa_tilde;
    report.entries.push_back({report.crossings[i].lambda_from, 0, ok,
                              describe(report.crossings[i - 1].kappa_tilde) + " < " +
                                  describe(report.crossings[i].kappa_tilde)});
  }
  return report;
}

DetuningOrdering verify_detuning_ordering(int n_spins, int index, double r_negative,
                                          double r_positive) {
  if (index < 1) throw DomainError("crossing index starts at 1");
  if (!(r_negative < 0.0) || !(r_positive > 0.0)) {
    throw DomainError("need r_negative < 0 < r_positive");
  }
  const Excitation lambda = Excitation::lowest(n_spins).shifted(index - 1);
  auto crossing_at = [&](double r) {
    return find_critical_coupling(ModelParams::single_mode(n_spins, r, 0.0), lambda).kappa_tilde;
  };
  DetuningOrdering result;
  result.kappa_negative = crossing_at(r_negative);
  result.kappa_resonant = crossing_at(0.0);
  result.kappa_positive = crossing_at(r_positive);
  result.negative_below_resonant = result.kappa_negative < result.kappa_resonant;
  result.resonant_below_positive = result.kappa_resonant < result.kappa_positive;
  return result;
}

}  // namespace sbm
