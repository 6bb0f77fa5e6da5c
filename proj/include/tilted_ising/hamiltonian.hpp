#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tilted_ising/chain.hpp"

namespace tilted_ising {

/// Dense real symmetric Hamiltonian of the tilted-field chain.
struct HamiltonianMatrix {
  ChainParams params;
  Eigen::MatrixXd matrix;
};

/// Diagonal element <k|H|k> = J * sum_n z_n z_{n+1} + B cos(theta) * sum_n z_n.
double diagonal_element(const ChainParams& p, std::size_t k);

/// Arbitrary element <a|H|b> without materializing the dense matrix.
/// Off-diagonal elements are B sin(theta) between words differing in one bit.
double hamiltonian_element(const ChainParams& p, std::size_t a, std::size_t b);

/// Builds the full 2^L x 2^L matrix. Exactly symmetric by construction.
HamiltonianMatrix build_hamiltonian(const ChainParams& p);

enum class Parity { Even, Odd };

/// One sector of the bit-reversal symmetry. Basis vectors are stored
/// sparsely: a palindromic word |s> spans a one-dimensional even direction,
/// a non-palindromic pair contributes (|s> +- |rev s>)/sqrt(2). Ordering:
/// palindromes first by index, then pairs by their smaller index.
struct SymmetrySector {
  Parity parity = Parity::Even;
  int L = 0;

  struct BasisVector {
    std::size_t index;    ///< smaller basis word
    std::size_t partner;  ///< reversed word; equals index for palindromes
    bool palindrome() const { return index == partner; }
  };
  std::vector<BasisVector> basis;

  std::size_t dim() const { return basis.size(); }

  /// Dense orthonormal basis, one column per sector vector (2^L x dim).
  Eigen::MatrixXd dense_basis() const;

  /// Maps a sector-coordinate vector to full-space coordinates.
  Eigen::VectorXd lift(const Eigen::VectorXd& sector_vec) const;

  /// Lifts several sector vectors at once (columns).
  Eigen::MatrixXd lift_columns(const Eigen::MatrixXd& sector_vecs) const;
};

/// Even and odd bit-reversal sectors for an L-site chain.
std::pair<SymmetrySector, SymmetrySector> build_sectors(int L);

/// V^T H V over the sector basis. Exact block diagonalization: the
/// cross-sector block of H vanishes identically.
Eigen::MatrixXd project_to_sector(const HamiltonianMatrix& H, const SymmetrySector& sector);

/// Projected sector Hamiltonian built directly from the chain parameters,
/// without the dense 2^L x 2^L intermediate.
Eigen::MatrixXd sector_matrix(const ChainParams& p, const SymmetrySector& sector);

/// Max-abs element of the even-odd cross block V_e^T H V_o.
double cross_sector_max(const ChainParams& p, const SymmetrySector& even,
                        const SymmetrySector& odd);

/// Max-abs deviation of the spectrum of H(J,B,theta) from the negated,
/// reversed spectrum of H(-J,B,theta). For L <= 6 the conjugation by the
/// product of sigma^y operators is also checked element by element and the
/// larger deviation is returned.
double duality_check(const ChainParams& p);

}  // namespace tilted_ising
