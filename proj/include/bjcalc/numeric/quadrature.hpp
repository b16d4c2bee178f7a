#pragma once

#include "bjcalc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

namespace bjcalc::numeric {

/// Gauss-Legendre nodes and weights on [0, 1] (Golub-Welsch).
template <class Real>
std::pair<Eigen::Matrix<Real, Eigen::Dynamic, 1>, Eigen::Matrix<Real, Eigen::Dynamic, 1>> gauss_legendre(int order) {
  if (order < 2) throw GridError("quadrature order must be at least 2");
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix jacobi = Matrix::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const Real beta = k / std::sqrt(Real(4) * k * k - 1);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> nodes = (solver.eigenvalues().array() + 1) / 2;
  Eigen::Matrix<Real, Eigen::Dynamic, 1> weights = solver.eigenvectors().row(0).transpose().array().square();
  return {nodes, weights};
}

}  // namespace bjcalc::numeric
