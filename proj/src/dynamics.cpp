#include "tilted_ising/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "tilted_ising/entanglement.hpp"
#include "tilted_ising/parallel.hpp"

namespace tilted_ising {

PureState bell_pair_state(int L, int i, int j, int filler_bit) {
  if (L < 2) throw std::invalid_argument("bell_pair_state: L must be >= 2");
  if (i < 1 || j < 1 || i > L || j > L || i >= j)
    throw std::invalid_argument("bell_pair_state: need sites 1 <= i < j <= L");
  if (filler_bit != 0 && filler_bit != 1)
    throw std::invalid_argument("bell_pair_state: filler bit must be 0 or 1");

  std::size_t filler = 0;
  const std::size_t bi = std::size_t{1} << (L - i);
  const std::size_t bj = std::size_t{1} << (L - j);
  if (filler_bit == 1) {
    filler = (std::size_t{1} << L) - 1;
    filler &= ~(bi | bj);
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(std::size_t{1} << L);
  const double a = 1.0 / std::sqrt(2.0);
  amps[filler] = a;            // pair in |00>
  amps[filler | bi | bj] = a;  // pair in |11>
  return PureState(L, std::move(amps));
}

PureState bell_seed_state(int L) {
  if (L < 3) throw std::invalid_argument("bell_seed_state: L must be >= 3");
  return bell_pair_state(L, 1, 2, 1);
}

PureState evolve_state(const SpectrumResult& full_spectrum, const PureState& psi0, double t) {
  if (!full_spectrum.has_vectors())
    throw std::invalid_argument("evolve_state: spectrum lacks eigenvectors");
  if (full_spectrum.eigenvectors.rows() != psi0.amplitudes.size() ||
      full_spectrum.eigenvectors.cols() != psi0.amplitudes.size())
    throw std::invalid_argument("evolve_state: need a full-space eigendecomposition");

  const Eigen::MatrixXd& V = full_spectrum.eigenvectors;
  const Eigen::VectorXd& E = full_spectrum.eigenvalues;
  // Complex work split into real matvecs; V stays real, which also keeps the
  // memory footprint flat over long time grids.
  const Eigen::VectorXd c_re = V.transpose() * psi0.amplitudes.real();
  const Eigen::VectorXd c_im = V.transpose() * psi0.amplitudes.imag();
  Eigen::VectorXd w_re(E.size()), w_im(E.size());
  for (Eigen::Index k = 0; k < E.size(); ++k) {
    const double ph_re = std::cos(E[k] * t);
    const double ph_im = -std::sin(E[k] * t);
    w_re[k] = ph_re * c_re[k] - ph_im * c_im[k];
    w_im[k] = ph_re * c_im[k] + ph_im * c_re[k];
  }
  Eigen::VectorXcd amps(V.rows());
  amps.real() = V * w_re;
  amps.imag() = V * w_im;
  return PureState(psi0.L, std::move(amps));
}

TimeSeries evolve(const EvolutionPlan& plan) {
  plan.params.validate();
  if (plan.initial.L != plan.params.L)
    throw std::invalid_argument("evolve: initial state length mismatch");
  const Eigen::Index nt = plan.t_grid.size();
  if (nt == 0) throw std::invalid_argument("evolve: empty time grid");
  for (Eigen::Index i = 0; i < nt; ++i) {
    if (plan.t_grid[i] < 0.0 || (i > 0 && plan.t_grid[i] < plan.t_grid[i - 1]))
      throw std::invalid_argument("evolve: time grid must be nonnegative and ascending");
  }

  const SpectrumResult spec = sector_spectrum(plan.params, SectorChoice::Full, true);
  const int L = plan.params.L;

  TimeSeries series;
  series.times = plan.t_grid;
  if (plan.nn_concurrence) {
    series.nn_concurrence.resize(nt, L - 1);
    series.avg_nn_concurrence.resize(nt);
  }
  if (plan.q) series.q.resize(nt);
  if (plan.total_tangle) series.total_tangle.resize(nt);

  std::vector<double> norm_errors(nt, 0.0);
  parallel_for(nt, plan.workers, [&](std::size_t i) {
    PureState psi = evolve_state(spec, plan.initial, plan.t_grid[i]);
    norm_errors[i] = std::abs(psi.norm() - 1.0);
    if (plan.nn_concurrence) {
      double sum = 0.0;
      for (int l = 1; l < L; ++l) {
        const double c = concurrence(partial_trace_pair(psi, l, l + 1));
        series.nn_concurrence(i, l - 1) = c;
        sum += c;
      }
      series.avg_nn_concurrence[i] = sum / (L - 1);
    }
    if (plan.q) series.q[i] = q_measure(psi);
    if (plan.total_tangle) series.total_tangle[i] = total_tangle(psi);
  });
  for (double e : norm_errors) series.max_norm_error = std::max(series.max_norm_error, e);
  return series;
}

std::optional<double> quench_time(const TimeSeries& series, double threshold, double window) {
  const Eigen::Index n = series.avg_nn_concurrence.size();
  if (n == 0) throw std::invalid_argument("quench_time: series lacks avg_nn_concurrence");
  const double t_max = series.times[n - 1];
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (series.times[i] + window > t_max) break;  // window no longer observable
    bool quenched = true;
    for (j = i; j < n && series.times[j] <= series.times[i] + window; ++j) {
      if (series.avg_nn_concurrence[j] >= threshold) {
        quenched = false;
        break;
      }
    }
    if (quenched) return series.times[i];
  }
  return std::nullopt;
}

}  // namespace tilted_ising
