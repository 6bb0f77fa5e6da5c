#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace tilted_ising {

using Complex = std::complex<double>;

// Basis convention: a computational basis state |s_1 s_2 ... s_L> maps to the
// integer with s_1 as the most significant bit. Bit value 0 encodes the
// sigma^z eigenvalue +1, bit value 1 encodes -1.

/// Pure state of an L-spin register, stored as 2^L complex amplitudes.
struct PureState {
  int L = 0;
  Eigen::VectorXcd amplitudes;

  PureState() = default;
  PureState(int L_, Eigen::VectorXcd amps);

  static PureState basis_state(int L, std::size_t index);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  void normalize();
};

/// Ordered subset of site indices, 1-based, strictly increasing.
struct SiteSubset {
  std::vector<int> sites;

  SiteSubset() = default;
  SiteSubset(std::initializer_list<int> s) : sites(s) {}
  explicit SiteSubset(std::vector<int> s) : sites(std::move(s)) {}

  /// Contiguous block {first, ..., last}.
  static SiteSubset range(int first, int last);

  std::size_t size() const { return sites.size(); }
  /// Throws std::invalid_argument unless nonempty, strictly increasing and
  /// contained in [1, L].
  void validate(int L) const;
};

/// Reduced density matrix on a subset of sites. Rows and columns are indexed
/// by the subset's own basis words, first listed site as the most
/// significant bit.
struct ReducedDensityMatrix {
  SiteSubset sites;
  Eigen::MatrixXcd matrix;

  std::size_t dim() const { return matrix.rows(); }
  double trace_error() const { return std::abs(matrix.trace() - Complex{1.0, 0.0}); }
  double hermiticity_error() const { return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff(); }
};

/// Index of the basis state |s_1 ... s_L>; bits must be 0 or 1.
std::size_t basis_index(const std::vector<int>& spin_string);

/// Reverses the low L bits of k (site order reflection).
std::size_t reverse_bits(std::size_t k, int L);

/// sigma^z eigenvalue (+1 or -1) of 1-based site n in basis state k.
inline int z_value(std::size_t k, int L, int n) {
  return ((k >> (L - n)) & 1u) ? -1 : +1;
}

/// Site-order reflection |s_1 ... s_L> -> |s_L ... s_1>. An involution.
PureState bit_reverse_state(const PureState& psi);

/// Partial trace of |psi><psi| onto the given subset of sites.
ReducedDensityMatrix partial_trace(const PureState& psi, const SiteSubset& keep);

/// Two-site reduced density matrix for sites i < j (both 1-based). Basis
/// order |00>, |01>, |10>, |11> with the i-site bit first.
ReducedDensityMatrix partial_trace_pair(const PureState& psi, int i, int j);

/// Haar-random normalized state (complex Gaussian amplitudes).
PureState random_state(int L, std::mt19937_64& rng);

}  // namespace tilted_ising
