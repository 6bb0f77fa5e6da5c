#pragma once

#include <stdexcept>
#include <string>

namespace tilted_ising {

/// Numerical failure while unfolding a spectrum (non-monotone staircase fit).
class UnfoldingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested problem size exceeds the configured resource guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tilted_ising
