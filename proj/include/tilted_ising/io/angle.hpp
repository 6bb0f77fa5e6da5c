#pragma once

#include <string>

#include <Eigen/Dense>

namespace tilted_ising::io {

/// Parses an angle literal: plain decimals ("0.4"), or pi expressions of the
/// form "[coef]pi[/den]" such as "pi", "2pi", "pi/2", "7pi/16", "-3pi/8".
double parse_angle(const std::string& text);

/// Parses "start:stop:count" (angle literals, positive integer count) into a
/// uniform inclusive grid. count = 1 yields just {start}.
Eigen::VectorXd parse_angle_grid(const std::string& text);

}  // namespace tilted_ising::io
