#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tilted_ising/chain.hpp"
#include "tilted_ising/hamiltonian.hpp"

namespace tilted_ising {

enum class SectorChoice { Even, Odd, Full };

std::string to_string(SectorChoice s);
SectorChoice sector_from_string(const std::string& name);

/// Result of a dense symmetric eigendecomposition. When a symmetry sector
/// was diagonalized, eigenvectors are returned in full-space coordinates.
struct SpectrumResult {
  ChainParams params;
  SectorChoice sector = SectorChoice::Full;
  Eigen::VectorXd eigenvalues;   ///< ascending
  Eigen::MatrixXd eigenvectors;  ///< columns; empty unless requested

  bool has_vectors() const { return eigenvectors.size() > 0; }
  std::size_t size() const { return eigenvalues.size(); }
};

/// Eigendecomposition of an explicitly given symmetric matrix. Throws
/// std::invalid_argument when the asymmetry exceeds 1e-10.
SpectrumResult diagonalize(const Eigen::MatrixXd& H, bool want_vectors);

/// Spectrum of the chain Hamiltonian restricted to a sector (or the full
/// space). Sector eigenvectors are lifted to full-space coordinates.
SpectrumResult sector_spectrum(const ChainParams& p, SectorChoice sector, bool want_vectors);

/// The `count` eigenpairs at the center of the spectrum, computed without
/// accumulating the full eigenvector matrix.
SpectrumResult central_band_spectrum(const ChainParams& p, SectorChoice sector, int count);

struct SweepOptions {
  std::vector<int> measure_levels;  ///< sector-relative level indices to measure
  int workers = 0;                  ///< 0 = hardware concurrency
};

/// Eigenvalue curves over a theta grid. Levels are identified by ascending
/// index within the sector, so tracked curves never cross by construction.
struct LevelTrack {
  ChainParams base;
  SectorChoice sector = SectorChoice::Full;
  Eigen::VectorXd thetas;
  Eigen::MatrixXd levels;  ///< grid x n_levels

  std::vector<int> measured_levels;
  Eigen::MatrixXd q;            ///< grid x measured_levels
  Eigen::MatrixXd s_half;       ///< bits
  Eigen::MatrixXd total_tangle;

  std::size_t grid_size() const { return thetas.size(); }
  std::size_t n_levels() const { return levels.cols(); }
};

LevelTrack sweep_spectrum(const ChainParams& base, const Eigen::VectorXd& theta_grid,
                          SectorChoice sector, const SweepOptions& options = {});

/// A local minimum of the gap between adjacent levels k and k+1.
struct AvoidedCrossing {
  int lower_level = 0;      ///< k of the pair (k, k+1)
  double theta_star = 0.0;  ///< angle of closest approach
  double min_gap = 0.0;
  bool degenerate = false;  ///< gap below 1e-12: a true crossing event
};

/// Golden-section minimization of a unimodal scalar function on [a, b].
/// Returns (argmin, min) once the bracket is narrower than tol.
std::pair<double, double> golden_section_minimize(const std::function<double(double)>& f,
                                                  double a, double b, double tol);

/// Grid-scan plus golden-section refinement of gap minima for the level pair
/// (k, k+1), with the gap re-evaluated through the supplied callable.
std::vector<AvoidedCrossing> find_avoided_crossings_on(
    const LevelTrack& track, int k, const std::function<double(double)>& gap_fn,
    double refine_tol);

/// Same, with the gap evaluated by re-diagonalizing the chain Hamiltonian of
/// track.base at each probe angle.
std::vector<AvoidedCrossing> find_avoided_crossings(const LevelTrack& track, int k,
                                                    double refine_tol = 1e-6);

/// Per-eigenstate summary used by the eigenstate tables.
struct EigenstateRow {
  double energy;
  double log_pr;  ///< nats
  double s_sh;    ///< nats
  double q;
  double s_half;  ///< bits
};

/// Localization and entanglement measures for every eigenstate of a
/// spectrum. Requires eigenvectors; rows come out sorted by energy.
std::vector<EigenstateRow> eigenstate_report(const SpectrumResult& spectrum);

}  // namespace tilted_ising
