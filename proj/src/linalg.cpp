#include "tilted_ising/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace tilted_ising::linalg {

namespace {

[[noreturn]] void lapack_failure(const char* routine, int info) {
  throw std::runtime_error(std::string(routine) + " failed with info=" + std::to_string(info));
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd A) {
  const int n = static_cast<int>(A.rows());
  Eigen::VectorXd w(n);
  if (n == 0) return w;
  int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, A.data(), n, w.data());
  if (info != 0) lapack_failure("dsyevd", info);
  return w;
}

void symmetric_eigendecomposition(Eigen::MatrixXd& A_to_vectors, Eigen::VectorXd& values) {
  const int n = static_cast<int>(A_to_vectors.rows());
  values.resize(n);
  if (n == 0) return;
  int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, A_to_vectors.data(), n, values.data());
  if (info != 0) lapack_failure("dsyevd", info);
}

void symmetric_eigenpairs_range(Eigen::MatrixXd& A, int il, int iu, Eigen::VectorXd& values,
                                Eigen::MatrixXd& vectors) {
  const int n = static_cast<int>(A.rows());
  const int m_req = iu - il + 1;
  values.resize(m_req);
  vectors.resize(n, m_req);
  std::vector<lapack_int> isuppz(2 * std::max(1, m_req));
  lapack_int m = 0;
  int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, A.data(), n, 0.0, 0.0, il, iu,
                            0.0, &m, values.data(), vectors.data(), n, isuppz.data());
  if (info != 0) lapack_failure("dsyevr", info);
  if (m != m_req) lapack_failure("dsyevr (eigenpair count)", static_cast<int>(m));
}

}  // namespace tilted_ising::linalg
