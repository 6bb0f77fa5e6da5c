#pragma once

#include <cstddef>
#include <cstdint>

namespace tilted_ising {

/// Parameters of the open spin-1/2 Ising chain in a tilted magnetic field,
///
///   H = J sum_{n=1}^{L-1} sz_n sz_{n+1}
///     + B sum_{n=1}^{L} (sin(theta) sx_n + cos(theta) sz_n)
///
/// theta = 0 is the longitudinal field, theta = pi/2 the transverse one.
struct ChainParams {
  double J = 1.0;
  double B = 1.0;
  double theta = 0.0;  ///< tilt angle in radians
  int L = 1;           ///< number of spins

  /// Hilbert-space dimension 2^L.
  std::size_t dim() const { return std::size_t{1} << L; }

  /// Throws std::invalid_argument for L < 1 or L beyond the resource guard.
  void validate() const;

  ChainParams with_theta(double t) const {
    ChainParams p = *this;
    p.theta = t;
    return p;
  }
};

/// Largest chain length accepted by matrix-building routines. Defaults to 14;
/// the TILTED_ISING_MAX_L environment variable overrides it.
int max_chain_length();

/// Throws ResourceLimitError when L exceeds max_chain_length().
void check_chain_length(int L);

}  // namespace tilted_ising
