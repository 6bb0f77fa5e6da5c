#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tilted_ising/io/csv.hpp"

namespace tilted_ising::io {

/// Minimal self-contained SVG plotter: line plots, scatter, histogram bars
/// and matrix heatmaps with axes, ticks, a title and an optional legend.
/// No external assets are referenced.
class SvgFigure {
 public:
  SvgFigure(int width, int height, std::string title, std::string xlabel, std::string ylabel);

  void add_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const std::string& color,
                double stroke_width = 1.2, const std::string& legend = "");
  void add_scatter(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const std::string& color,
                   double radius = 2.0, const std::string& legend = "");
  void add_bars(const Eigen::VectorXd& centers, const Eigen::VectorXd& heights, double bar_width,
                const std::string& color);
  /// Cell (i, j) of `values` is drawn at x = xs[j], y = ys[i]; darker cells
  /// mean larger values. Ranges saturate at [vmin, vmax].
  void add_heatmap(const Eigen::MatrixXd& values, double x0, double x1, double y0, double y1,
                   double vmin, double vmax);

  /// Free-form y-range override (default: padded data range).
  void set_y_range(double lo, double hi);
  void set_x_range(double lo, double hi);

  void set_metadata(const Metadata& entries);

  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    enum class Kind { Line, Scatter, Bars, Heatmap } kind;
    Eigen::VectorXd x, y;
    Eigen::MatrixXd grid;
    double param = 0.0;  // stroke width / radius / bar width
    double vmin = 0.0, vmax = 1.0;
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    std::string color;
    std::string legend;
  };

  int width_, height_;
  std::string title_, xlabel_, ylabel_;
  std::vector<Series> series_;
  Metadata metadata_;
  bool has_x_range_ = false, has_y_range_ = false;
  double xr_lo_ = 0, xr_hi_ = 1, yr_lo_ = 0, yr_hi_ = 1;
};

}  // namespace tilted_ising::io
