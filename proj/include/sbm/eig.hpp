#pragma once

#include <Eigen/Dense>

namespace sbm {

struct EigenDecomposition {
  /// Ascending.
  Eigen::VectorXd values;
  /// Column i pairs with values(i); orthonormal.
  Eigen::MatrixXd vectors;
};

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// Full spectrum of a real symmetric matrix. Each eigenvector is oriented so
/// that its largest-magnitude component is positive.
///
/// Throws ContractViolation for non-square input or asymmetry above 1e-12
/// (relative to the largest entry), ConvergenceError if the solver gives up.
EigenDecomposition eigh_symmetric(const Eigen::MatrixXd& matrix);

/// Lowest eigenpair, same orientation rule. Tridiagonal input takes a
/// cheaper path that skips the Householder reduction.
Eigenpair lowest_eigenpair(const Eigen::MatrixXd& matrix);

}  // namespace sbm
