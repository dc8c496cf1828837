#include "sbm/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sbm/errors.hpp"

namespace sbm {
namespace {

constexpr double kArccosSlack = 1e-12;

void check_detuning(double r) {
  if (!(r > -1.0)) throw DomainError("detuning r must be > -1");
}

void check_coupling(double kappa) {
  if (!(kappa >= 0.0)) throw DomainError("coupling kappa must be >= 0");
}

// (2/3)√(3α) ζ, the magnitude of the lowest H_I eigenvalue shift.
double cubic_root_term(const ClosedFormAuxiliaries& aux) {
  return 2.0 / 3.0 * std::sqrt(3.0 * aux.alpha) * aux.zeta;
}

}  // namespace

ClosedFormAuxiliaries closed_form_auxiliaries(int lambda, double r, double kappa) {
  check_detuning(r);
  check_coupling(kappa);
  if (lambda < 0) throw DomainError("auxiliaries need lambda >= 0");
  ClosedFormAuxiliaries aux;
  aux.tau = 1 + 2 * lambda;
  aux.alpha = (4.0 * lambda + 2.0) * kappa * kappa + r * r;
  if (aux.alpha <= 0.0) throw DomainError("alpha vanishes at kappa = 0, r = 0");

  const double argument = 3.0 * std::sqrt(3.0) * kappa * kappa * r / std::pow(aux.alpha, 1.5);
  if (std::abs(argument) > 1.0 + kArccosSlack) {
    throw DomainError("arccos argument " + std::to_string(argument) + " outside [-1, 1]");
  }
  aux.phi = std::acos(std::clamp(argument, -1.0, 1.0));
  aux.theta = (std::numbers::pi - aux.phi) / 3.0;
  aux.zeta = std::cos(aux.theta);
  return aux;
}

double energy_closed(int lambda, double r, double kappa) {
  check_detuning(r);
  check_coupling(kappa);
  if (lambda < -1) throw DomainError("two-spin blocks start at lambda = -1");
  if (lambda == -1) return -1.0;
  if (lambda == 0) return 0.5 * (r - std::sqrt(8.0 * kappa * kappa + r * r));
  if (kappa == 0.0 && r == 0.0) return lambda;  // H_I vanishes
  const auto aux = closed_form_auxiliaries(lambda, r, kappa);
  return lambda + lambda * r - cubic_root_term(aux);
}

std::vector<double> ClosedFormEigenvector::normalized() const {
  std::vector<double> out(amplitudes);
  for (double& a : out) a *= normalization;
  return out;
}

ClosedFormEigenvector eigenvector_closed(int lambda, double r, double kappa) {
  check_detuning(r);
  check_coupling(kappa);
  if (lambda < 0) throw DomainError("closed-form eigenvectors exist for lambda >= 0");
  if (kappa == 0.0) throw DomainError("eigenvector is degenerate at kappa = 0");

  ClosedFormEigenvector ev;
  ev.lambda = lambda;
  if (lambda == 0) {
    const double a0 = (r + std::sqrt(8.0 * kappa * kappa + r * r)) / (2.0 * std::sqrt(2.0) * kappa);
    ev.amplitudes = {a0, 1.0};
  } else {
    const auto aux = closed_form_auxiliaries(lambda, r, kappa);
    const double w = cubic_root_term(aux);
    const double l = lambda;
    const double a = -std::sqrt(1.0 + l) / std::sqrt(l) +
                     w * (r + w) / (2.0 * std::sqrt(l * (1.0 + l)) * kappa * kappa);
    const double b = (r + w) / (std::sqrt(2.0 * (1.0 + l)) * kappa);
    ev.amplitudes = {a, b, 1.0};
  }
  double norm2 = 0.0;
  for (double a : ev.amplitudes) norm2 += a * a;
  ev.normalization = 1.0 / std::sqrt(norm2);
  return ev;
}

double c0_closed(double r, double kappa) {
  check_detuning(r);
  if (!(kappa > 0.0)) throw DomainError("c0_closed needs kappa > 0");
  const double s = std::sqrt(8.0 * kappa * kappa + r * r);
  return (r + s) * (r + s) / (2.0 * (8.0 * kappa * kappa + r * (r + s)));
}

double clambda_closed_raw(int lambda, double r, double kappa) {
  check_detuning(r);
  if (lambda < 1) throw DomainError("clambda_closed needs lambda >= 1");
  if (!(kappa > 0.0)) throw DomainError("clambda_closed needs kappa > 0");

  const auto aux = closed_form_auxiliaries(lambda, r, kappa);
  const double l = lambda;
  const double sl = std::sqrt(l);
  const double s1 = std::sqrt(1.0 + l);
  const double k2 = kappa * kappa;
  const double a = aux.alpha;
  const double z = aux.zeta;
  const double s3a = std::sqrt(3.0 * a);

  const double numerator =
      3.0 * sl * k2 *
      (3.0 * (4.0 * std::pow(1.0 + l, 1.5) * k2 + sl * r * r) - 4.0 * s3a * (s1 - sl) * r * z -
       4.0 * a * (2.0 * s1 - sl) * z * z);
  const double denominator =
      9.0 * k2 * (2.0 * (1.0 + 2.0 * l) * (1.0 + l) * k2 + l * r * r) - 12.0 * s3a * k2 * r * z -
      6.0 * a * (2.0 * (2.0 + l) * k2 - r * r) * z * z +
      8.0 * std::pow(a, 1.5) * z * z * z * (std::sqrt(3.0) * r + std::sqrt(a) * z);
  return numerator / denominator;
}

double clambda_closed(int lambda, double r, double kappa) {
  return std::max(0.0, clambda_closed_raw(lambda, r, kappa));
}

double clambda_resonant(int lambda) {
  if (lambda < 0) throw DomainError("clambda_resonant needs lambda >= 0");
  const double l = lambda;
  const double d = std::sqrt(1.0 + l) - std::sqrt(l);
  return d * d / (2.0 * (1.0 + 2.0 * l));
}

}  // namespace sbm
