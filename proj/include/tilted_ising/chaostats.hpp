#pragma once

#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace tilted_ising {

/// Spacings below this are treated as numerically degenerate levels.
inline constexpr double kDegenerateSpacing = 1e-8;

/// Spectrum mapped to unit mean spacing by a polynomial fit of the staircase
/// function. Edges are trimmed before spacings are extracted.
struct UnfoldedSpectrum {
  Eigen::VectorXd raw;       ///< retained raw eigenvalues, ascending
  Eigen::VectorXd unfolded;  ///< mapped values, ascending
  Eigen::VectorXd spacings;  ///< s_i = u_{i+1} - u_i
  int fit_degree = 0;
  double trim_fraction = 0.0;
  double mean_spacing = 0.0;
  double degenerate_fraction = 0.0;  ///< fraction of spacings < 1e-8

  /// Spacings with near-exact degeneracies removed; the input for spacing
  /// statistics.
  Eigen::VectorXd stat_spacings() const;
};

/// Unfolds an ascending spectrum from one symmetry sector. Throws
/// std::invalid_argument when fewer than 50 levels survive trimming and
/// UnfoldingError when the fitted staircase is not increasing on the
/// retained range.
UnfoldedSpectrum unfold(const Eigen::VectorXd& eigenvalues, int fit_degree = 15,
                        double trim_fraction = 0.05);

/// Fraction of adjacent raw spacings below tol in an ascending spectrum.
double near_degenerate_fraction(const Eigen::VectorXd& ascending, double tol = kDegenerateSpacing);

/// Wigner (GOE) surmise density and CDF: (pi/2) s exp(-pi s^2 / 4).
double wigner_pdf(double s);
double wigner_cdf(double s);
/// Poisson density and CDF: exp(-s).
double poisson_pdf(double s);
double poisson_cdf(double s);

struct Histogram {
  Eigen::VectorXd centers;
  Eigen::VectorXd density;  ///< normalized so the histogram integrates to 1
  double bin_width = 0.0;
  std::size_t count = 0;
};

/// Density-normalized nearest-neighbor spacing histogram.
Histogram nnsd_histogram(const Eigen::VectorXd& spacings, double bin_width);

struct KSReport {
  double d_poisson = 0.0;
  double d_wigner = 0.0;
  std::size_t n = 0;
};

/// Kolmogorov-Smirnov distance of a sample to an arbitrary CDF, evaluating
/// both one-sided deviations at every sorted sample point.
double ks_distance(const Eigen::VectorXd& sample, const std::function<double(double)>& cdf);

/// KS distances of a spacing sample against the Poisson and Wigner CDFs.
KSReport ks_statistic(const Eigen::VectorXd& spacings);

/// Pearson correlation coefficient.
double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Spearman rank correlation (average ranks for ties).
double spearman(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace tilted_ising
