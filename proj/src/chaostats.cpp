#include "tilted_ising/chaostats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tilted_ising/errors.hpp"

namespace tilted_ising {

Eigen::VectorXd UnfoldedSpectrum::stat_spacings() const {
  std::vector<double> kept;
  kept.reserve(spacings.size());
  for (double s : spacings) {
    if (s >= kDegenerateSpacing) kept.push_back(s);
  }
  return Eigen::Map<const Eigen::VectorXd>(kept.data(), kept.size());
}

namespace {

// Chebyshev design matrix on the eigenvalue range mapped to [-1, 1]; a raw
// power basis at degree ~15 would be numerically useless.
Eigen::MatrixXd chebyshev_design(const Eigen::VectorXd& x, double lo, double hi, int degree) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd T(n, degree + 1);
  const double scale = (hi > lo) ? 2.0 / (hi - lo) : 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = scale * (x[i] - lo) - 1.0;
    T(i, 0) = 1.0;
    if (degree >= 1) T(i, 1) = t;
    for (int d = 2; d <= degree; ++d) T(i, d) = 2.0 * t * T(i, d - 1) - T(i, d - 2);
  }
  return T;
}

}  // namespace

UnfoldedSpectrum unfold(const Eigen::VectorXd& eigenvalues, int fit_degree,
                        double trim_fraction) {
  const Eigen::Index n = eigenvalues.size();
  if (fit_degree < 1) throw std::invalid_argument("unfold: fit_degree must be >= 1");
  if (trim_fraction < 0.0 || trim_fraction >= 0.5)
    throw std::invalid_argument("unfold: trim_fraction must lie in [0, 0.5)");
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (eigenvalues[i] > eigenvalues[i + 1])
      throw std::invalid_argument("unfold: eigenvalues must be ascending");
  }
  const Eigen::Index trim = static_cast<Eigen::Index>(std::floor(trim_fraction * n));
  const Eigen::Index kept = n - 2 * trim;
  if (kept < 50) throw std::invalid_argument("unfold: fewer than 50 levels after trimming");

  // Staircase fit target: value i - 1/2 at the i-th level (1-based).
  Eigen::VectorXd counts(n);
  for (Eigen::Index i = 0; i < n; ++i) counts[i] = i + 0.5;
  const double lo = eigenvalues[0], hi = eigenvalues[n - 1];
  const Eigen::MatrixXd T = chebyshev_design(eigenvalues, lo, hi, fit_degree);
  const Eigen::VectorXd coeffs = T.colPivHouseholderQr().solve(counts);
  const Eigen::VectorXd fitted = T * coeffs;

  UnfoldedSpectrum result;
  result.fit_degree = fit_degree;
  result.trim_fraction = trim_fraction;
  result.raw = eigenvalues.segment(trim, kept);
  result.unfolded = fitted.segment(trim, kept);

  for (Eigen::Index i = 0; i + 1 < kept; ++i) {
    const bool distinct = result.raw[i + 1] > result.raw[i];
    if (distinct && result.unfolded[i + 1] <= result.unfolded[i]) {
      throw UnfoldingError(
          "unfold: fitted staircase is not increasing on the retained range; "
          "try a lower fit degree");
    }
  }
  result.spacings.resize(kept - 1);
  Eigen::Index degenerate = 0;
  for (Eigen::Index i = 0; i + 1 < kept; ++i) {
    double s = result.unfolded[i + 1] - result.unfolded[i];
    if (s < 0.0) s = 0.0;  // exact duplicates only; the monotone check ran above
    result.spacings[i] = s;
    if (s < kDegenerateSpacing) ++degenerate;
  }
  result.mean_spacing = result.spacings.size() ? result.spacings.mean() : 0.0;
  result.degenerate_fraction =
      result.spacings.size() ? static_cast<double>(degenerate) / result.spacings.size() : 0.0;
  return result;
}

double near_degenerate_fraction(const Eigen::VectorXd& ascending, double tol) {
  const Eigen::Index n = ascending.size();
  if (n < 2) return 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (ascending[i + 1] - ascending[i] < tol) ++count;
  }
  return static_cast<double>(count) / (n - 1);
}

static void require_nonnegative(double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be nonnegative");
}

double wigner_pdf(double s) {
  require_nonnegative(s);
  return 0.5 * M_PI * s * std::exp(-0.25 * M_PI * s * s);
}

double wigner_cdf(double s) {
  require_nonnegative(s);
  return 1.0 - std::exp(-0.25 * M_PI * s * s);
}

double poisson_pdf(double s) {
  require_nonnegative(s);
  return std::exp(-s);
}

double poisson_cdf(double s) {
  require_nonnegative(s);
  return 1.0 - std::exp(-s);
}

Histogram nnsd_histogram(const Eigen::VectorXd& spacings, double bin_width) {
  if (spacings.size() == 0) throw std::invalid_argument("nnsd_histogram: empty spacing sample");
  if (bin_width <= 0.0) throw std::invalid_argument("nnsd_histogram: bin width must be positive");
  const double maxval = spacings.maxCoeff();
  const Eigen::Index bins = static_cast<Eigen::Index>(std::floor(maxval / bin_width)) + 1;
  Histogram h;
  h.bin_width = bin_width;
  h.count = spacings.size();
  h.centers.resize(bins);
  h.density = Eigen::VectorXd::Zero(bins);
  for (Eigen::Index b = 0; b < bins; ++b) h.centers[b] = (b + 0.5) * bin_width;
  for (double s : spacings) {
    Eigen::Index b = static_cast<Eigen::Index>(std::floor(s / bin_width));
    b = std::clamp<Eigen::Index>(b, 0, bins - 1);
    h.density[b] += 1.0;
  }
  h.density /= static_cast<double>(h.count) * bin_width;
  return h;
}

double ks_distance(const Eigen::VectorXd& sample, const std::function<double(double)>& cdf) {
  if (sample.size() == 0) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> sorted(sample.data(), sample.data() + sample.size());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
  }
  return d;
}

KSReport ks_statistic(const Eigen::VectorXd& spacings) {
  KSReport report;
  report.n = spacings.size();
  report.d_poisson = ks_distance(spacings, [](double s) { return poisson_cdf(s); });
  report.d_wigner = ks_distance(spacings, [](double s) { return wigner_cdf(s); });
  return report;
}

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson: need two equal-length samples of size >= 2");
  const double mx = x.mean(), my = y.mean();
  const Eigen::VectorXd dx = x.array() - mx;
  const Eigen::VectorXd dy = y.array() - my;
  const double denom = dx.norm() * dy.norm();
  if (denom == 0.0) return 0.0;
  return dx.dot(dy) / denom;
}

namespace {

Eigen::VectorXd ranks(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&x](Eigen::Index a, Eigen::Index b) { return x[a] < x[b]; });
  Eigen::VectorXd r(n);
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg_rank = 0.5 * (i + j) + 1.0;  // average rank of the tie block
    for (Eigen::Index t = i; t <= j; ++t) r[order[t]] = avg_rank;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return pearson(ranks(x), ranks(y));
}

}  // namespace tilted_ising
