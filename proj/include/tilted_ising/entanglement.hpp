#pragma once

#include <Eigen/Dense>

#include "tilted_ising/state.hpp"

namespace tilted_ising {

// Entropy conventions: entanglement entropies (s_half, s_l) are reported in
// bits, so a Bell pair across the cut scores exactly 1. The localization
// measures log_pr and s_sh use natural logarithms.

/// Bundle of the per-state measures.
struct MeasureSet {
  double s_half = 0.0;              ///< block entropy at l = L/2, bits
  Eigen::VectorXd s_l;              ///< block entropies for l = 1..L-1, bits
  double q = 0.0;                   ///< multipartite measure, in [0, 1]
  double total_tangle = 0.0;        ///< sum of squared pair concurrences
  Eigen::MatrixXd concurrence;      ///< L x L symmetric, zero diagonal
  double log_pr = 0.0;              ///< nats
  double s_sh = 0.0;                ///< nats
};

/// Von Neumann entropy (base 2) of the reduced state of the first l spins.
double entropy_block(const PureState& psi, int l);

/// Von Neumann entropy (base 2) of an explicit reduced density matrix.
/// Eigenvalues below 1e-12 contribute zero.
double entropy_of_rdm(const ReducedDensityMatrix& rho);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const ReducedDensityMatrix& rho);

/// Pairwise concurrences C(rho_ij) for all site pairs.
Eigen::MatrixXd concurrence_matrix(const PureState& psi);

/// Sum of squared concurrences over all pairs i < j.
double total_tangle(const PureState& psi);

/// Multipartite measure from single-site purities:
/// 2 (1 - mean_k Tr rho_k^2).
double q_measure(const PureState& psi);

struct Localization {
  double log_pr;  ///< -ln sum_k |psi_k|^4
  double s_sh;    ///< -sum_k |psi_k|^2 ln |psi_k|^2
};

/// Participation-ratio and Shannon localization measures in the
/// computational basis (natural log).
Localization localization(const PureState& psi);

/// All of the above for one state.
MeasureSet measure_all(const PureState& psi);

}  // namespace tilted_ising
