#pragma once

#include <optional>

#include <Eigen/Dense>

#include "tilted_ising/chain.hpp"
#include "tilted_ising/spectra.hpp"
#include "tilted_ising/state.hpp"

namespace tilted_ising {

/// What to compute along a time evolution.
struct EvolutionPlan {
  ChainParams params;
  PureState initial;
  Eigen::VectorXd t_grid;  ///< ascending, nonnegative (units of 1/J, hbar = 1)
  bool nn_concurrence = true;
  bool q = true;
  bool total_tangle = true;
  int workers = 0;
};

/// Observables sampled on the time grid.
struct TimeSeries {
  Eigen::VectorXd times;
  Eigen::MatrixXd nn_concurrence;       ///< grid x (L-1), column l-1 is pair (l, l+1)
  Eigen::VectorXd avg_nn_concurrence;   ///< mean over the L-1 pairs
  Eigen::VectorXd q;
  Eigen::VectorXd total_tangle;
  double max_norm_error = 0.0;  ///< max |  ||psi(t)|| - 1  | over the grid
};

/// The seeded initial state (|11> + |00>)/sqrt(2) on sites (1,2) with every
/// other spin down (bit 1). Requires L >= 3.
PureState bell_seed_state(int L);

/// Generalized seed: the Bell pair (|11>+|00>)/sqrt(2) sits on sites (i, j),
/// all remaining sites carry filler_bit.
PureState bell_pair_state(int L, int i, int j, int filler_bit = 1);

/// |psi(t)> from a full-space eigendecomposition (spectral synthesis).
/// Negative t evolves backwards.
PureState evolve_state(const SpectrumResult& full_spectrum, const PureState& psi0, double t);

/// Exact unitary evolution of plan.initial under the chain Hamiltonian, with
/// the selected observables sampled at every grid time. One full-space
/// eigendecomposition is amortized over the whole grid.
TimeSeries evolve(const EvolutionPlan& plan);

/// First grid time t* such that the average nearest-neighbor concurrence
/// stays below threshold on all grid points of [t*, t* + window]. The window
/// must be fully covered by the grid. Empty optional: never quenched.
std::optional<double> quench_time(const TimeSeries& series, double threshold, double window);

}  // namespace tilted_ising
