#pragma once

#include <Eigen/Core>

#include "singcbf/errors.hpp"

namespace singcbf {

/// Gram matrix of a d x m mapping matrix phi:
///   M = phi phi^T  when d < m (over-actuated),
///   M = phi^T phi  otherwise,
/// so M is always k x k with k = min(d, m) and its eigenvalues are the
/// squared singular values of phi.
struct GramMatrix {
  Eigen::MatrixXd values;
  int source_rows = 0;  // d of the originating phi
  int source_cols = 0;  // m of the originating phi
};

GramMatrix gram_matrix(const Eigen::MatrixXd& phi);

/// Eigen-decomposition of a symmetric matrix, eigenvalues ascending,
/// eigenvector columns orthonormal and aligned with the eigenvalues.
struct EigenSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

/// Cyclic Jacobi eigensolver for small symmetric matrices. Deterministic:
/// fixed sweep order, ascending sort with index tie-break, and a fixed
/// eigenvector sign convention (largest-magnitude component positive).
/// Throws ContractViolation when the input is not symmetric.
EigenSpectrum symmetric_eigen(const Eigen::MatrixXd& S);

inline EigenSpectrum eigen_spectrum(const GramMatrix& M) {
  return symmetric_eigen(M.values);
}

/// sqrt(lambda_min) of the Gram matrix, clamped to zero when round-off
/// pushes lambda_min slightly negative.
double smallest_singular_value(const Eigen::MatrixXd& phi);

}  // namespace singcbf
