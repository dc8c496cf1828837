#include "sbm/eig.hpp"

#include <algorithm>
#include <cmath>

#include "sbm/errors.hpp"

namespace sbm {
namespace {

constexpr double kSymmetryTolerance = 1e-12;

void check_symmetric(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw ContractViolation("eigensolver input is not square");
  }
  if (matrix.rows() == 0) throw ContractViolation("eigensolver input is empty");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw ContractViolation("eigensolver input is not symmetric");
  }
}

bool is_tridiagonal(const Eigen::MatrixXd& matrix) {
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 2; i < n; ++i) {
      if (matrix(i, j) != 0.0) return false;
    }
  }
  return true;
}

void orient(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  if (v(pivot) < 0.0) v = -v;
}

void check_converged(Eigen::ComputationInfo info) {
  if (info != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed to converge");
}

}  // namespace

EigenDecomposition eigh_symmetric(const Eigen::MatrixXd& matrix) {
  check_symmetric(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  check_converged(solver.info());
  EigenDecomposition result{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index i = 0; i < result.vectors.cols(); ++i) orient(result.vectors.col(i));
  return result;
}

Eigenpair lowest_eigenpair(const Eigen::MatrixXd& matrix) {
  check_symmetric(matrix);
  const Eigen::Index n = matrix.rows();
  if (n == 1) return {matrix(0, 0), Eigen::VectorXd::Ones(1)};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  if (is_tridiagonal(matrix)) {
    const Eigen::VectorXd diagonal = matrix.diagonal();
    const Eigen::VectorXd subdiagonal = matrix.diagonal(-1);
    solver.computeFromTridiagonal(diagonal, subdiagonal);
  } else {
    solver.compute(matrix);
  }
  check_converged(solver.info());
  Eigenpair pair{solver.eigenvalues()(0), solver.eigenvectors().col(0)};
  orient(pair.vector);
  return pair;
}

}  // namespace sbm
