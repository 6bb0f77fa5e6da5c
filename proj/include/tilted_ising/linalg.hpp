#pragma once

#include <Eigen/Dense>

namespace tilted_ising::linalg {

/// Ascending eigenvalues of a real symmetric matrix (LAPACK dsyevd).
Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd A);

/// Full eigendecomposition; eigenvectors returned as columns, eigenvalues
/// ascending.
void symmetric_eigendecomposition(Eigen::MatrixXd& A_to_vectors, Eigen::VectorXd& values);

/// Eigenpairs il..iu (1-based, ascending order) of a real symmetric matrix
/// via LAPACK dsyevr. Destroys A.
void symmetric_eigenpairs_range(Eigen::MatrixXd& A, int il, int iu,
                                Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

}  // namespace tilted_ising::linalg
