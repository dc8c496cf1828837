#pragma once
// Brute-force references built in the full 2^N spin space (bit 0 of a spin
// means up, the first spin is the most significant bit) tensored with
// truncated Fock spaces.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Truncated annihilation operator on {|0>, ..., |dim-1>}.
inline Eigen::MatrixXd annihilation(int dim) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

/// Σ_i σ+_i on N spins.
inline Eigen::MatrixXd collective_raising(int n_spins) {
  const int dim = 1 << n_spins;
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    for (int i = 0; i < n_spins; ++i) {
      const int bit = 1 << (n_spins - 1 - i);
      if (s & bit) jp(s & ~bit, s) += 1.0;
    }
  }
  return jp;
}

/// Normalized symmetric state with `ups` spins up.
inline Eigen::VectorXd dicke(int n_spins, int ups) {
  const int dim = 1 << n_spins;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (int s = 0; s < dim; ++s) {
    if (n_spins - __builtin_popcount(s) == ups) v(s) = 1.0;
  }
  return v / v.norm();
}

inline Eigen::VectorXd fock(int dim, int n) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(n) = 1.0;
  return v;
}

/// Keeps the first two spins of an N-spin density matrix.
inline Eigen::MatrixXd keep_first_two(const Eigen::MatrixXd& rho, int n_spins) {
  const int rest = 1 << (n_spins - 2);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int e = 0; e < rest; ++e) out(a, b) += rho(a * rest + e, b * rest + e);
    }
  }
  return out;
}

/// Traces the boson factor of dimension `boson_dim` off a spin ⊗ boson state.
inline Eigen::MatrixXd trace_bosons(const Eigen::VectorXd& psi, int spin_dim, int boson_dim) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(spin_dim, spin_dim);
  for (int a = 0; a < spin_dim; ++a) {
    for (int b = 0; b < spin_dim; ++b) {
      for (int e = 0; e < boson_dim; ++e) out(a, b) += psi(a * boson_dim + e) * psi(b * boson_dim + e);
    }
  }
  return out;
}

/// Textbook concurrence from the eigenvalues of ρ ρ̃ (real ρ).
inline double concurrence_textbook(const Eigen::MatrixXd& rho) {
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4d tilde = yy * rho * yy;
  Eigen::EigenSolver<Eigen::Matrix4d> solver(rho * tilde);
  std::vector<double> roots;
  for (int i = 0; i < 4; ++i) roots.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
  std::sort(roots.rbegin(), roots.rend());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

}  // namespace oracle
