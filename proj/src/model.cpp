#include "sbm/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sbm/errors.hpp"

namespace sbm {
namespace {

void check_excitation(const ModelParams& params, Excitation lambda) {
  const int offset = lambda.twice() + params.n_spins;
  if (offset < 0) {
    throw DomainError("excitation number " + lambda.str() + " is below -N/2 for N = " +
                      std::to_string(params.n_spins));
  }
  if (offset % 2 != 0) {
    throw DomainError("excitation number " + lambda.str() + " is not reachable from -N/2 for N = " +
                      std::to_string(params.n_spins));
  }
}

// <m+1| J+ |m> for spin j = N/2, written with doubled quantum numbers.
double raising_element(int n_spins, int twice_m) {
  const int up_steps = (n_spins - twice_m) / 2;  // j - m
  const int down_steps = (n_spins + twice_m) / 2;  // j + m
  return std::sqrt(static_cast<double>(up_steps) * static_cast<double>(down_steps + 1));
}

}  // namespace

ModelParams ModelParams::single_mode(int n_spins, double r, double kappa) {
  ModelParams p;
  p.n_spins = n_spins;
  p.detuning_r = r;
  p.coupling_kappa = kappa;
  return p;
}

ModelParams ModelParams::two_mode(int n_spins, double ra, double rb, double kappa_a,
                                  double kappa_b) {
  ModelParams p;
  p.n_spins = n_spins;
  p.coupling_kappa = kappa_a;
  p.first_mode_detuning_ra = ra;
  p.second_mode = SecondMode{rb, kappa_b};
  return p;
}

void ModelParams::validate() const {
  if (n_spins < 1) throw DomainError("n_spins must be >= 1");
  if (!(coupling_kappa >= 0.0)) throw DomainError("coupling kappa must be >= 0");
  if (second_mode) {
    if (!(first_mode_detuning_ra > -1.0)) throw DomainError("detuning r_a must be > -1");
    if (!(second_mode->detuning_rb > -1.0)) throw DomainError("detuning r_b must be > -1");
    if (!(second_mode->coupling_kappa_b >= 0.0)) throw DomainError("coupling kappa_b must be >= 0");
  } else if (!(detuning_r > -1.0)) {
    throw DomainError("detuning r must be > -1");
  }
}

int BlockBasisState::total_photons() const {
  return std::accumulate(photon_numbers.begin(), photon_numbers.end(), 0);
}

double ladder_weight(int n_spins, int x) {
  if (x <= 0) return 0.0;
  return static_cast<double>(x) * static_cast<double>(n_spins + 1 - x);
}

ExcitationBlock build_single_mode_block(const ModelParams& params, Excitation lambda) {
  params.validate();
  if (params.is_two_mode()) {
    throw ContractViolation("build_single_mode_block called with a two-mode model");
  }
  check_excitation(params, lambda);

  const int n_spins = params.n_spins;
  const double r = params.detuning_r;
  const double kappa = params.coupling_kappa;

  // Lowest photon number sits with the largest admissible m.
  const int twice_m_top = std::min(n_spins, lambda.twice());
  const int n_min = (lambda.twice() - twice_m_top) / 2;
  const int dim = (twice_m_top + n_spins) / 2 + 1;

  ExcitationBlock block;
  block.lambda = lambda;
  block.basis.reserve(dim);
  block.matrix = Eigen::MatrixXd::Zero(dim, dim);

  for (int k = 0; k < dim; ++k) {
    const int n = n_min + k;
    block.basis.push_back({twice_m_top - 2 * k, {n}});
    block.matrix(k, k) = r * n;
  }
  // (m, n) <-> (m - 1, n + 1): κ √(n+1) <m| J+ |m-1>.
  for (int k = 0; k + 1 < dim; ++k) {
    const int n_upper = n_min + k + 1;
    const double element =
        kappa * std::sqrt(static_cast<double>(n_upper)) *
        raising_element(n_spins, block.basis[k + 1].twice_m);
    block.matrix(k, k + 1) = element;
    block.matrix(k + 1, k) = element;
  }
  return block;
}

ExcitationBlock build_two_mode_block(const ModelParams& params, Excitation lambda) {
  params.validate();
  if (!params.is_two_mode()) {
    throw ContractViolation("build_two_mode_block called without a second mode");
  }
  check_excitation(params, lambda);

  const int n_spins = params.n_spins;
  const double ra = params.first_mode_detuning_ra;
  const double rb = params.second_mode->detuning_rb;
  const double kappa_a = params.coupling_kappa;
  const double kappa_b = params.second_mode->coupling_kappa_b;

  ExcitationBlock block;
  block.lambda = lambda;
  const int twice_m_top = std::min(n_spins, lambda.twice());
  for (int twice_m = twice_m_top; twice_m >= -n_spins; twice_m -= 2) {
    const int photons = (lambda.twice() - twice_m) / 2;
    for (int nb = 0; nb <= photons; ++nb) block.basis.push_back({twice_m, {photons - nb, nb}});
  }

  const int dim = block.dimension();
  block.matrix = Eigen::MatrixXd::Zero(dim, dim);

  // States with spin m start at offset(m); inside, n_b is the position.
  auto offset_of = [&](int twice_m) {
    int offset = 0;
    for (int t = twice_m_top; t > twice_m; t -= 2) offset += (lambda.twice() - t) / 2 + 1;
    return offset;
  };

  int row = 0;
  for (int twice_m = twice_m_top; twice_m >= -n_spins; twice_m -= 2) {
    const int photons = (lambda.twice() - twice_m) / 2;
    const bool can_raise = twice_m + 2 <= twice_m_top;
    const int raised_offset = can_raise ? offset_of(twice_m + 2) : 0;
    const double spin_element = can_raise ? raising_element(n_spins, twice_m) : 0.0;
    for (int nb = 0; nb <= photons; ++nb, ++row) {
      const int na = photons - nb;
      block.matrix(row, row) = ra * na + rb * nb;
      if (!can_raise) continue;
      // J+ a : (m, n_a, n_b) -> (m+1, n_a-1, n_b)
      if (na > 0) {
        const int col = raised_offset + nb;
        const double element = kappa_a * std::sqrt(static_cast<double>(na)) * spin_element;
        block.matrix(row, col) = element;
        block.matrix(col, row) = element;
      }
      // J+ b : (m, n_a, n_b) -> (m+1, n_a, n_b-1)
      if (nb > 0) {
        const int col = raised_offset + (nb - 1);
        const double element = kappa_b * std::sqrt(static_cast<double>(nb)) * spin_element;
        block.matrix(row, col) = element;
        block.matrix(col, row) = element;
      }
    }
  }
  return block;
}

ExcitationBlock build_block(const ModelParams& params, Excitation lambda) {
  return params.is_two_mode() ? build_two_mode_block(params, lambda)
                              : build_single_mode_block(params, lambda);
}

int block_dimension(const ModelParams& params, Excitation lambda) {
  params.validate();
  check_excitation(params, lambda);
  const int twice_m_top = std::min(params.n_spins, lambda.twice());
  const int spin_states = (twice_m_top + params.n_spins) / 2 + 1;
  if (!params.is_two_mode()) return spin_states;
  int dim = 0;
  for (int twice_m = twice_m_top; twice_m >= -params.n_spins; twice_m -= 2) {
    dim += (lambda.twice() - twice_m) / 2 + 1;
  }
  return dim;
}

}  // namespace sbm
