#include "sbm/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>

#include "sbm/errors.hpp"

namespace sbm {
namespace {

using Complex = std::complex<double>;

constexpr double kWernerTolerance = 1e-13;
constexpr double kStateTolerance = 1e-9;
constexpr double kKinkRatio = 50.0;
constexpr double kKinkFloor = 1e-10;
constexpr int kMedianHalfWindow = 10;

int dicke_index(int n_spins, int twice_m) { return (n_spins - twice_m) / 2; }

// σy ⊗ σy in the |↑↑>, |↑↓>, |↓↑>, |↓↓> basis.
Eigen::Matrix4cd spin_flip() {
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  return flip;
}

Eigen::Matrix4cd hermitian_sqrt(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  if (solver.info() != Eigen::Success) throw InvalidState("density matrix diagonalization failed");
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::Vector4d roots;
  for (int i = 0; i < 4; ++i) {
    const double value = solver.eigenvalues()(i);
    // Roundoff-level eigenvalues are zero.
    roots(i) = value > 64.0 * std::numeric_limits<double>::epsilon() * scale ? std::sqrt(value) : 0.0;
  }
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

void check_state(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw InvalidState("density matrix is not Hermitian");
  }
  const Complex trace = rho.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > kStateTolerance) {
    throw InvalidState("density matrix trace is " + std::to_string(trace.real()));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -kStateTolerance) {
    throw InvalidState("density matrix has eigenvalue " + std::to_string(solver.eigenvalues()(0)));
  }
}

bool near_any(double kappa, double window, std::span<const double> markers) {
  return std::any_of(markers.begin(), markers.end(),
                     [&](double g) { return std::abs(kappa - g) <= window; });
}

double spacing_at(const std::vector<double>& k, std::size_t i) {
  double h = 0.0;
  if (i > 0) h = std::max(h, k[i] - k[i - 1]);
  if (i + 1 < k.size()) h = std::max(h, k[i + 1] - k[i]);
  return h;
}

double block_concurrence(const ModelParams& params, Excitation lambda, double kappa,
                         CouplingAxis axis) {
  const ModelParams p = with_coupling(params, kappa, axis);
  return spin_concurrence(block_ground_state(p, lambda), params.n_spins);
}

}  // namespace

TwoQubitDensityMatrix TwoQubitDensityMatrix::from_matrix(const Eigen::Matrix4cd& rho) {
  TwoQubitDensityMatrix out;
  out.rho = rho;
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  const double tol = kWernerTolerance * scale;
  bool werner = true;
  for (int i = 0; i < 4 && werner; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool structural = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!structural && std::abs(rho(i, j)) > tol) {
        werner = false;
        break;
      }
    }
  }
  const Complex c = rho(1, 1);
  werner = werner && std::abs(rho(2, 2) - c) <= tol && std::abs(rho(1, 2) - c) <= tol &&
           std::abs(rho(2, 1) - c) <= tol;
  out.is_werner_form = werner;
  return out;
}

Eigen::MatrixXd spin_density_dicke(const GroundStateSolution& solution, int n_spins) {
  if (static_cast<std::size_t>(solution.amplitudes.size()) != solution.basis.size()) {
    throw ContractViolation("ground state amplitudes do not match its basis");
  }
  // Group amplitudes by photon label, then trace the label out.
  std::map<std::vector<int>, std::vector<std::pair<int, double>>> by_photons;
  for (std::size_t i = 0; i < solution.basis.size(); ++i) {
    const BlockBasisState& state = solution.basis[i];
    if (std::abs(state.twice_m) > n_spins) throw DomainError("basis state outside spin N/2");
    by_photons[state.photon_numbers].emplace_back(dicke_index(n_spins, state.twice_m),
                                                  solution.amplitudes(static_cast<Eigen::Index>(i)));
  }
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n_spins + 1, n_spins + 1);
  for (const auto& [photons, components] : by_photons) {
    for (const auto& [k, a] : components) {
      for (const auto& [k2, a2] : components) rho(k, k2) += a * a2;
    }
  }
  return rho;
}

TwoQubitDensityMatrix reduced_spin_rdm(const GroundStateSolution& solution, int n_spins) {
  if (n_spins != 2) throw DomainError("reduced_spin_rdm handles N = 2 only");
  // |1,1> -> |↑↑>, |1,0> -> (|↑↓> + |↓↑>)/√2, |1,-1> -> |↓↓>
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4d dicke[3] = {{1.0, 0.0, 0.0, 0.0}, {0.0, s, s, 0.0}, {0.0, 0.0, 0.0, 1.0}};

  std::map<std::vector<int>, Eigen::Vector4cd> by_photons;
  for (std::size_t i = 0; i < solution.basis.size(); ++i) {
    const BlockBasisState& state = solution.basis[i];
    auto [it, inserted] = by_photons.try_emplace(state.photon_numbers, Eigen::Vector4cd::Zero());
    it->second += solution.amplitudes(static_cast<Eigen::Index>(i)) *
                  dicke[dicke_index(2, state.twice_m)].cast<Complex>();
  }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (const auto& [photons, spin] : by_photons) rho += spin * spin.adjoint();
  return TwoQubitDensityMatrix::from_matrix(rho);
}

double werner_concurrence_fast(const TwoQubitDensityMatrix& rho) {
  if (!rho.is_werner_form) throw ContractViolation("state is not of Werner form");
  const double p11 = rho.rho(0, 0).real();
  const double p22 = rho.rho(1, 1).real();
  const double p44 = rho.rho(3, 3).real();
  return 2.0 * std::max(p22 - std::sqrt(std::max(0.0, p11 * p44)), 0.0);
}

double wootters_concurrence(const TwoQubitDensityMatrix& rho) {
  check_state(rho.rho);
  const Eigen::Matrix4cd flip = spin_flip();
  const Eigen::Matrix4cd root = hermitian_sqrt(rho.rho);
  // √ρ̃ = (σy⊗σy) √ρ* (σy⊗σy); (√ρ √ρ̃)(√ρ √ρ̃)† = √ρ ρ̃ √ρ.
  const Eigen::Matrix4cd product = root * flip * root.conjugate() * flip;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(product);
  const Eigen::Vector4d xi = svd.singularValues();  // descending
  return std::max(0.0, xi(0) - xi(1) - xi(2) - xi(3));
}

TwoQubitDensityMatrix dicke_pairwise_rdm(int n_spins, std::span<const double> populations) {
  if (n_spins < 2) throw DomainError("pairwise state needs at least two spins");
  if (populations.size() != static_cast<std::size_t>(n_spins + 1)) {
    throw DomainError("expected N + 1 populations");
  }
  double total = 0.0;
  for (double p : populations) {
    if (p < -1e-12) throw DomainError("negative population");
    total += p;
  }
  if (std::abs(total - 1.0) > kStateTolerance) throw DomainError("populations do not sum to 1");

  const double pairs = static_cast<double>(n_spins) * (n_spins - 1);
  double both_up = 0.0;
  double both_down = 0.0;
  double mixed = 0.0;
  for (int k = 0; k <= n_spins; ++k) {
    const double up = n_spins - k;
    const double down = k;
    both_up += populations[k] * up * (up - 1.0) / pairs;
    both_down += populations[k] * down * (down - 1.0) / pairs;
    mixed += populations[k] * up * down / pairs;
  }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = both_up;
  rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = mixed;
  rho(3, 3) = both_down;
  TwoQubitDensityMatrix out;
  out.rho = rho;
  out.is_werner_form = true;
  return out;
}

double spin_concurrence(const GroundStateSolution& solution, int n_spins) {
  if (n_spins < 2) throw DomainError("concurrence needs at least two spins");
  if (n_spins == 2) {
    const TwoQubitDensityMatrix rho = reduced_spin_rdm(solution, 2);
    return rho.is_werner_form ? werner_concurrence_fast(rho) : wootters_concurrence(rho);
  }
  const Eigen::MatrixXd spin = spin_density_dicke(solution, n_spins);
  std::vector<double> populations(n_spins + 1);
  for (int k = 0; k <= n_spins; ++k) populations[k] = spin(k, k);
  return werner_concurrence_fast(dicke_pairwise_rdm(n_spins, populations));
}

std::vector<double> KappaRange::points() const {
  if (samples < 2) throw DomainError("a kappa range needs at least 2 samples");
  if (!(hi > lo)) throw DomainError("kappa range must be increasing");
  std::vector<double> out(samples);
  for (int i = 0; i < samples; ++i) out[i] = lo + (hi - lo) * i / (samples - 1);
  out.back() = hi;
  return out;
}

ConcurrenceProfile concurrence_profile(const ModelParams& params, const KappaRange& range,
                                       CouplingAxis axis) {
  params.validate();
  if (range.lo < 0.0) throw DomainError("couplings are non-negative");
  ConcurrenceProfile profile;
  profile.kappa_samples = range.points();
  for (double kappa : profile.kappa_samples) {
    const GroundStateSolution ground = ground_state_at(with_coupling(params, kappa, axis));
    profile.c_values.push_back(spin_concurrence(ground, params.n_spins));
    profile.lambda_star.push_back(ground.lambda_star);
    profile.energies.push_back(ground.energy);
  }
  const Excitation first = profile.lambda_star.front();
  const Excitation last = profile.lambda_star.back();
  for (Excitation lambda = first; lambda < last; lambda = lambda.next()) {
    const double kappa = find_critical_coupling(params, lambda, axis).kappa_tilde;
    if (kappa >= range.lo && kappa <= range.hi) profile.gsi_markers.push_back(kappa);
  }
  profile.kink_markers = detect_concurrence_kinks(profile, profile.gsi_markers);
  return profile;
}

std::vector<ClampTransition> clamp_transitions(const ConcurrenceProfile& profile,
                                               std::span<const double> gsi_markers) {
  const std::vector<double>& k = profile.kappa_samples;
  const std::vector<double>& c = profile.c_values;
  std::vector<ClampTransition> out;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const bool zero_here = c[i] == 0.0;
    const bool zero_next = c[i + 1] == 0.0;
    if (zero_here == zero_next) continue;
    const double h = k[i + 1] - k[i];
    const bool at_gsi = std::any_of(gsi_markers.begin(), gsi_markers.end(), [&](double g) {
      return g >= k[i] - h && g <= k[i + 1] + h;
    });
    out.push_back({0.5 * (k[i] + k[i + 1]),
                   zero_next ? KinkKind::clamp_onset : KinkKind::clamp_release, at_gsi});
  }
  return out;
}

std::vector<Kink> detect_concurrence_kinks(const ConcurrenceProfile& profile,
                                           std::span<const double> gsi_markers) {
  const std::vector<double>& k = profile.kappa_samples;
  const std::vector<double>& c = profile.c_values;
  std::vector<Kink> kinks;
  if (c.size() != k.size()) throw ContractViolation("profile samples and values differ in length");
  if (c.size() < 5) return kinks;

  std::vector<double> clamp_points;
  for (const ClampTransition& t : clamp_transitions(profile, gsi_markers)) {
    if (t.at_gsi) continue;
    kinks.push_back({t.kappa, t.kind});
    clamp_points.push_back(t.kappa);
  }

  const std::size_t n = c.size();
  std::vector<double> second(n, 0.0);
  // Stencils touching an exact zero belong to the clamp transitions above.
  std::vector<bool> active(n, false);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    second[i] = std::abs(c[i - 1] - 2.0 * c[i] + c[i + 1]);
    active[i] = c[i - 1] != 0.0 && c[i] != 0.0 && c[i + 1] != 0.0;
  }

  auto flagged = [&](std::size_t i) {
    if (i == 0 || i + 1 >= n) return false;
    const double h = spacing_at(k, i);
    if (near_any(k[i], 2.0 * h, gsi_markers)) return false;
    if (near_any(k[i], 2.0 * h, clamp_points)) return false;
    if (!active[i]) return false;
    const std::size_t from = i > static_cast<std::size_t>(kMedianHalfWindow) + 1 ? i - kMedianHalfWindow : 1;
    const std::size_t to = std::min(n - 2, i + kMedianHalfWindow);
    std::vector<double> window;
    for (std::size_t j = from; j <= to; ++j) {
      if (active[j]) window.push_back(second[j]);
    }
    if (window.size() < 3) return false;
    std::nth_element(window.begin(), window.begin() + window.size() / 2, window.end());
    const double median = window[window.size() / 2];
    return second[i] > std::max(kKinkRatio * median, kKinkFloor);
  };

  // Adjacent flagged samples describe one kink; keep the sharpest.
  for (std::size_t i = 1; i + 1 < n;) {
    if (!flagged(i)) {
      ++i;
      continue;
    }
    std::size_t peak = i;
    std::size_t j = i;
    while (j + 1 < n && flagged(j)) {
      if (second[j] > second[peak]) peak = j;
      ++j;
    }
    kinks.push_back({k[peak], KinkKind::slope_jump});
    i = j + 1;
  }
  std::sort(kinks.begin(), kinks.end(), [](const Kink& a, const Kink& b) { return a.kappa < b.kappa; });
  return kinks;
}

RegionMaximum maximize_region_concurrence(const ModelParams& params, Excitation lambda,
                                          CouplingAxis axis) {
  params.validate();
  const Excitation start = ground_state_at(with_coupling(params, 0.0, axis)).lambda_star;
  if (lambda < start) {
    throw DomainError("block " + lambda.str() + " never hosts the ground state on this sweep");
  }
  RegionMaximum result;
  result.region_lo =
      lambda == start ? 0.0 : find_critical_coupling(params, lambda.prev(), axis).kappa_tilde;
  result.region_hi = find_critical_coupling(params, lambda, axis).kappa_tilde;
  if (!(result.region_hi > result.region_lo)) {
    throw DomainError("empty ground-state region for block " + lambda.str());
  }

  auto concurrence = [&](double kappa) { return block_concurrence(params, lambda, kappa, axis); };

  constexpr int kGrid = 256;
  const double lo = result.region_lo;
  const double hi = result.region_hi;
  const double step = (hi - lo) / (kGrid - 1);
  int best = 0;
  double best_value = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double kappa = i + 1 == kGrid ? hi : lo + step * i;
    const double value = concurrence(kappa);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  result.kappa = best + 1 == kGrid ? hi : lo + step * best;
  result.concurrence = best_value;

  // Golden-section refinement on the neighbouring grid cells.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(lo, result.kappa - step);
  double b = std::min(hi, result.kappa + step);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = concurrence(x1);
  double f2 = concurrence(x2);
  while (b - a > 1e-8) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = concurrence(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = concurrence(x2);
    }
  }
  for (double kappa : {a, b, 0.5 * (a + b)}) {
    const double value = concurrence(kappa);
    if (value > result.concurrence) {
      result.concurrence = value;
      result.kappa = kappa;
    }
  }
  return result;
}

double region_max_concurrence(const ModelParams& params, Excitation lambda, CouplingAxis axis) {
  return maximize_region_concurrence(params, lambda, axis).concurrence;
}

}  // namespace sbm
