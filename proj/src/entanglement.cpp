#include "tilted_ising/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace tilted_ising {

namespace {

constexpr double kEigenvalueFloor = 1e-12;
constexpr double kNegativeClip = -1e-10;

double entropy_bits_from_eigenvalues(const Eigen::VectorXd& evals) {
  double s = 0.0;
  for (double lam : evals) {
    if (lam < kEigenvalueFloor) continue;  // tiny and clipped-negative weights contribute 0
    s -= lam * std::log2(lam);
  }
  return s;
}

}  // namespace

double entropy_of_rdm(const ReducedDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix,
                                                         Eigen::EigenvaluesOnly);
  return entropy_bits_from_eigenvalues(solver.eigenvalues());
}

double entropy_block(const PureState& psi, int l) {
  if (l < 1 || l >= psi.L)
    throw std::invalid_argument("entropy_block: l must satisfy 1 <= l <= L-1");
  // Left-block amplitudes form the rows of a dA x dE matrix; the reduced
  // state of the smaller side carries the same nonzero spectrum.
  const std::size_t dA = std::size_t{1} << l;
  const std::size_t dE = std::size_t{1} << (psi.L - l);
  using RowMajorMap =
      Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  RowMajorMap M(psi.amplitudes.data(), dA, dE);
  Eigen::MatrixXcd gram;
  if (dA <= dE) {
    gram = M * M.adjoint();
  } else {
    gram = M.adjoint() * M;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  return entropy_bits_from_eigenvalues(solver.eigenvalues());
}

double concurrence(const ReducedDensityMatrix& rho) {
  if (rho.matrix.rows() != 4 || rho.matrix.cols() != 4)
    throw std::invalid_argument("concurrence: expected a 4x4 two-qubit density matrix");
  if (rho.hermiticity_error() > 1e-8)
    throw std::invalid_argument("concurrence: matrix is not Hermitian");
  if (rho.trace_error() > 1e-8) throw std::invalid_argument("concurrence: trace is not 1");

  // (sigma_y x sigma_y) is the anti-diagonal (-1, 1, 1, -1).
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;

  const Eigen::Matrix4cd rho_tilde = flip * rho.matrix.conjugate() * flip;
  const Eigen::Matrix4cd product = rho.matrix * rho_tilde;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, /*computeEigenvectors=*/false);

  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    double re = solver.eigenvalues()[i].real();
    if (re < 0.0 && re > kNegativeClip) re = 0.0;
    lambda[i] = std::max(re, 0.0);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  const double c = std::sqrt(lambda[0]) - std::sqrt(lambda[1]) - std::sqrt(lambda[2]) -
                   std::sqrt(lambda[3]);
  return std::max(c, 0.0);
}

Eigen::MatrixXd concurrence_matrix(const PureState& psi) {
  const int L = psi.L;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(L, L);
  for (int i = 1; i <= L; ++i) {
    for (int j = i + 1; j <= L; ++j) {
      const double c = concurrence(partial_trace_pair(psi, i, j));
      C(i - 1, j - 1) = c;
      C(j - 1, i - 1) = c;
    }
  }
  return C;
}

double total_tangle(const PureState& psi) {
  double tau = 0.0;
  for (int i = 1; i <= psi.L; ++i) {
    for (int j = i + 1; j <= psi.L; ++j) {
      const double c = concurrence(partial_trace_pair(psi, i, j));
      tau += c * c;
    }
  }
  return tau;
}

double q_measure(const PureState& psi) {
  const int L = psi.L;
  const std::size_t dim = psi.dim();
  double purity_sum = 0.0;
  for (int n = 1; n <= L; ++n) {
    const std::size_t bit = std::size_t{1} << (L - n);
    double p0 = 0.0;
    Complex coh{0.0, 0.0};
    for (std::size_t k = 0; k < dim; ++k) {
      if (k & bit) continue;
      const Complex a0 = psi.amplitudes[k];
      p0 += std::norm(a0);
      coh += a0 * std::conj(psi.amplitudes[k | bit]);
    }
    const double p1 = 1.0 - p0;
    purity_sum += p0 * p0 + p1 * p1 + 2.0 * std::norm(coh);
  }
  return 2.0 * (1.0 - purity_sum / L);
}

Localization localization(const PureState& psi) {
  double inverse_pr = 0.0;
  double s_sh = 0.0;
  for (Eigen::Index k = 0; k < psi.amplitudes.size(); ++k) {
    const double p = std::norm(psi.amplitudes[k]);
    inverse_pr += p * p;
    if (p >= 1e-16) s_sh -= p * std::log(p);
  }
  return Localization{-std::log(inverse_pr), s_sh};
}

MeasureSet measure_all(const PureState& psi) {
  MeasureSet m;
  const int L = psi.L;
  m.s_l.resize(std::max(L - 1, 0));
  for (int l = 1; l < L; ++l) m.s_l[l - 1] = entropy_block(psi, l);
  m.s_half = (L >= 2) ? m.s_l[L / 2 - 1] : 0.0;
  m.concurrence = concurrence_matrix(psi);
  m.total_tangle = m.concurrence.array().square().sum() / 2.0;  // each pair counted twice
  m.q = q_measure(psi);
  const Localization loc = localization(psi);
  m.log_pr = loc.log_pr;
  m.s_sh = loc.s_sh;
  return m;
}

}  // namespace tilted_ising
