#include "tilted_ising/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "tilted_ising/entanglement.hpp"
#include "tilted_ising/linalg.hpp"
#include "tilted_ising/parallel.hpp"
#include "tilted_ising/state.hpp"

namespace tilted_ising {

std::string to_string(SectorChoice s) {
  switch (s) {
    case SectorChoice::Even: return "even";
    case SectorChoice::Odd: return "odd";
    case SectorChoice::Full: return "full";
  }
  return "?";
}

SectorChoice sector_from_string(const std::string& name) {
  if (name == "even") return SectorChoice::Even;
  if (name == "odd") return SectorChoice::Odd;
  if (name == "full") return SectorChoice::Full;
  throw std::invalid_argument("unknown sector '" + name + "' (expected even, odd or full)");
}

SpectrumResult diagonalize(const Eigen::MatrixXd& H, bool want_vectors) {
  if (H.rows() != H.cols()) throw std::invalid_argument("diagonalize: matrix must be square");
  const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw std::invalid_argument("diagonalize: input is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
  SpectrumResult result;
  if (want_vectors) {
    result.eigenvectors = H;
    linalg::symmetric_eigendecomposition(result.eigenvectors, result.eigenvalues);
  } else {
    result.eigenvalues = linalg::symmetric_eigenvalues(H);
  }
  return result;
}

SpectrumResult sector_spectrum(const ChainParams& p, SectorChoice sector, bool want_vectors) {
  p.validate();
  SpectrumResult result;
  result.params = p;
  result.sector = sector;
  if (sector == SectorChoice::Full) {
    Eigen::MatrixXd H = build_hamiltonian(p).matrix;
    if (want_vectors) {
      result.eigenvectors = std::move(H);
      linalg::symmetric_eigendecomposition(result.eigenvectors, result.eigenvalues);
    } else {
      result.eigenvalues = linalg::symmetric_eigenvalues(std::move(H));
    }
    return result;
  }
  auto [even, odd] = build_sectors(p.L);
  const SymmetrySector& sec = (sector == SectorChoice::Even) ? even : odd;
  Eigen::MatrixXd Hs = sector_matrix(p, sec);
  if (want_vectors) {
    Eigen::MatrixXd vectors = std::move(Hs);
    linalg::symmetric_eigendecomposition(vectors, result.eigenvalues);
    result.eigenvectors = sec.lift_columns(vectors);
  } else {
    result.eigenvalues = linalg::symmetric_eigenvalues(std::move(Hs));
  }
  return result;
}

SpectrumResult central_band_spectrum(const ChainParams& p, SectorChoice sector, int count) {
  p.validate();
  if (count < 1) throw std::invalid_argument("central_band_spectrum: count must be >= 1");
  SpectrumResult result;
  result.params = p;
  result.sector = sector;

  Eigen::MatrixXd H;
  const SymmetrySector* lift_sector = nullptr;
  std::pair<SymmetrySector, SymmetrySector> sectors;
  if (sector == SectorChoice::Full) {
    H = build_hamiltonian(p).matrix;
  } else {
    sectors = build_sectors(p.L);
    lift_sector = (sector == SectorChoice::Even) ? &sectors.first : &sectors.second;
    H = sector_matrix(p, *lift_sector);
  }
  const int n = static_cast<int>(H.rows());
  if (count > n) throw std::invalid_argument("central_band_spectrum: count exceeds dimension");
  const int il = (n - count) / 2 + 1;  // 1-based
  const int iu = il + count - 1;
  Eigen::MatrixXd vectors;
  linalg::symmetric_eigenpairs_range(H, il, iu, result.eigenvalues, vectors);
  result.eigenvectors = lift_sector ? lift_sector->lift_columns(vectors) : std::move(vectors);
  return result;
}

namespace {

PureState state_from_column(int L, const Eigen::VectorXd& column) {
  return PureState(L, column.cast<Complex>());
}

}  // namespace

LevelTrack sweep_spectrum(const ChainParams& base, const Eigen::VectorXd& theta_grid,
                          SectorChoice sector, const SweepOptions& options) {
  base.validate();
  if (theta_grid.size() < 1) throw std::invalid_argument("sweep_spectrum: grid must not be empty");
  const bool measure = !options.measure_levels.empty();

  std::pair<SymmetrySector, SymmetrySector> sectors = build_sectors(base.L);
  const SymmetrySector* sec = nullptr;
  std::size_t dim = base.dim();
  if (sector == SectorChoice::Even) {
    sec = &sectors.first;
    dim = sec->dim();
  } else if (sector == SectorChoice::Odd) {
    sec = &sectors.second;
    dim = sec->dim();
  }

  LevelTrack track;
  track.base = base;
  track.sector = sector;
  track.thetas = theta_grid;
  track.levels.resize(theta_grid.size(), dim);
  if (measure) {
    for (int lvl : options.measure_levels) {
      if (lvl < 0 || static_cast<std::size_t>(lvl) >= dim)
        throw std::invalid_argument("sweep_spectrum: measured level index out of range");
    }
    track.measured_levels = options.measure_levels;
    track.q.resize(theta_grid.size(), options.measure_levels.size());
    track.s_half.resize(theta_grid.size(), options.measure_levels.size());
    track.total_tangle.resize(theta_grid.size(), options.measure_levels.size());
  }

  parallel_for(theta_grid.size(), options.workers, [&](std::size_t g) {
    const ChainParams p = base.with_theta(theta_grid[g]);
    Eigen::MatrixXd H = sec ? sector_matrix(p, *sec) : build_hamiltonian(p).matrix;
    if (!measure) {
      track.levels.row(g) = linalg::symmetric_eigenvalues(std::move(H)).transpose();
      return;
    }
    Eigen::VectorXd values;
    linalg::symmetric_eigendecomposition(H, values);
    track.levels.row(g) = values.transpose();
    const int half = p.L / 2;
    for (std::size_t m = 0; m < track.measured_levels.size(); ++m) {
      const int lvl = track.measured_levels[m];
      Eigen::VectorXd full = sec ? sec->lift(H.col(lvl)) : Eigen::VectorXd(H.col(lvl));
      PureState psi = state_from_column(p.L, full);
      track.q(g, m) = q_measure(psi);
      track.s_half(g, m) = (p.L >= 2) ? entropy_block(psi, half) : 0.0;
      track.total_tangle(g, m) = total_tangle(psi);
    }
  });
  return track;
}

std::pair<double, double> golden_section_minimize(const std::function<double(double)>& f,
                                                  double a, double b, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double best_x = (f1 < f2) ? x1 : x2;
  double best_f = std::min(f1, f2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
    if (f1 < best_f) best_f = f1, best_x = x1;
    if (f2 < best_f) best_f = f2, best_x = x2;
  }
  return {best_x, best_f};
}

std::vector<AvoidedCrossing> find_avoided_crossings_on(
    const LevelTrack& track, int k, const std::function<double(double)>& gap_fn,
    double refine_tol) {
  if (k < 0 || static_cast<std::size_t>(k + 1) >= track.n_levels())
    throw std::invalid_argument("find_avoided_crossings: level pair out of range");
  const Eigen::Index n = track.thetas.size();
  std::vector<AvoidedCrossing> found;
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    const double g_prev = track.levels(i - 1, k + 1) - track.levels(i - 1, k);
    const double g_here = track.levels(i, k + 1) - track.levels(i, k);
    const double g_next = track.levels(i + 1, k + 1) - track.levels(i + 1, k);
    if (g_here < g_prev && g_here <= g_next) {
      auto [theta_star, min_gap] =
          golden_section_minimize(gap_fn, track.thetas[i - 1], track.thetas[i + 1], refine_tol);
      AvoidedCrossing ac;
      ac.lower_level = k;
      ac.theta_star = theta_star;
      ac.min_gap = min_gap;
      ac.degenerate = min_gap < 1e-12;
      found.push_back(ac);
    }
  }
  return found;
}

std::vector<AvoidedCrossing> find_avoided_crossings(const LevelTrack& track, int k,
                                                    double refine_tol) {
  auto sectors = build_sectors(track.base.L);
  const SymmetrySector* sec = nullptr;
  if (track.sector == SectorChoice::Even) sec = &sectors.first;
  if (track.sector == SectorChoice::Odd) sec = &sectors.second;
  const ChainParams base = track.base;
  auto gap_fn = [base, sec, k](double theta) {
    const ChainParams p = base.with_theta(theta);
    Eigen::MatrixXd H = sec ? sector_matrix(p, *sec) : build_hamiltonian(p).matrix;
    const Eigen::VectorXd w = linalg::symmetric_eigenvalues(std::move(H));
    return w[k + 1] - w[k];
  };
  return find_avoided_crossings_on(track, k, gap_fn, refine_tol);
}

std::vector<EigenstateRow> eigenstate_report(const SpectrumResult& spectrum) {
  if (!spectrum.has_vectors())
    throw std::invalid_argument("eigenstate_report: spectrum lacks eigenvectors");
  const int L = spectrum.params.L;
  const int half = L / 2;
  std::vector<EigenstateRow> rows(spectrum.size());
  parallel_for(spectrum.size(), 0, [&](std::size_t i) {
    PureState psi = state_from_column(L, spectrum.eigenvectors.col(i));
    const Localization loc = localization(psi);
    rows[i] = EigenstateRow{spectrum.eigenvalues[i], loc.log_pr, loc.s_sh, q_measure(psi),
                            (L >= 2) ? entropy_block(psi, half) : 0.0};
  });
  return rows;
}

}  // namespace tilted_ising
