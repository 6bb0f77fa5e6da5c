#include "tilted_ising/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tilted_ising/linalg.hpp"
#include "tilted_ising/state.hpp"

namespace tilted_ising {

double diagonal_element(const ChainParams& p, std::size_t k) {
  // Adjacent-pair disagreement mask: popcount gives the number of unequal
  // neighbor pairs among the L-1 couplings.
  const std::size_t pair_mask = (p.L >= 2) ? ((std::size_t{1} << (p.L - 1)) - 1) : 0;
  const std::size_t d = (k ^ (k >> 1)) & pair_mask;
  const int unequal = std::popcount(d);
  const int coupling_sum = (p.L - 1) - 2 * unequal;     // sum_n z_n z_{n+1}
  const int z_sum = p.L - 2 * std::popcount(k);         // sum_n z_n
  return p.J * coupling_sum + p.B * std::cos(p.theta) * z_sum;
}

double hamiltonian_element(const ChainParams& p, std::size_t a, std::size_t b) {
  if (a == b) return diagonal_element(p, a);
  const std::size_t x = a ^ b;
  if (std::popcount(x) == 1) return p.B * std::sin(p.theta);
  return 0.0;
}

HamiltonianMatrix build_hamiltonian(const ChainParams& p) {
  p.validate();
  const std::size_t dim = p.dim();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  const double offdiag = p.B * std::sin(p.theta);
  for (std::size_t k = 0; k < dim; ++k) {
    H(k, k) = diagonal_element(p, k);
    for (int n = 1; n <= p.L; ++n) {
      const std::size_t m = k ^ (std::size_t{1} << (p.L - n));
      H(k, m) = offdiag;
    }
  }
  return HamiltonianMatrix{p, std::move(H)};
}

std::pair<SymmetrySector, SymmetrySector> build_sectors(int L) {
  if (L < 1) throw std::invalid_argument("build_sectors: L must be >= 1");
  SymmetrySector even{Parity::Even, L, {}};
  SymmetrySector odd{Parity::Odd, L, {}};
  std::vector<SymmetrySector::BasisVector> pairs;
  const std::size_t dim = std::size_t{1} << L;
  for (std::size_t s = 0; s < dim; ++s) {
    const std::size_t r = reverse_bits(s, L);
    if (r == s) {
      even.basis.push_back({s, s});
    } else if (s < r) {
      pairs.push_back({s, r});
    }
  }
  even.basis.insert(even.basis.end(), pairs.begin(), pairs.end());
  odd.basis = std::move(pairs);
  return {std::move(even), std::move(odd)};
}

Eigen::MatrixXd SymmetrySector::dense_basis() const {
  const std::size_t full = std::size_t{1} << L;
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(full, basis.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& b = basis[j];
    if (b.palindrome()) {
      V(b.index, j) = 1.0;
    } else {
      V(b.index, j) = inv_sqrt2;
      V(b.partner, j) = sign * inv_sqrt2;
    }
  }
  return V;
}

Eigen::VectorXd SymmetrySector::lift(const Eigen::VectorXd& sector_vec) const {
  if (static_cast<std::size_t>(sector_vec.size()) != basis.size())
    throw std::invalid_argument("lift: dimension mismatch");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(std::size_t{1} << L);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& b = basis[j];
    if (b.palindrome()) {
      full[b.index] += sector_vec[j];
    } else {
      full[b.index] += inv_sqrt2 * sector_vec[j];
      full[b.partner] += sign * inv_sqrt2 * sector_vec[j];
    }
  }
  return full;
}

Eigen::MatrixXd SymmetrySector::lift_columns(const Eigen::MatrixXd& sector_vecs) const {
  Eigen::MatrixXd out(std::size_t{1} << L, sector_vecs.cols());
  for (Eigen::Index c = 0; c < sector_vecs.cols(); ++c) {
    out.col(c) = lift(sector_vecs.col(c));
  }
  return out;
}

namespace {

// V^T H V with the sector's 1- or 2-entry sparse basis vectors; Element
// yields H(a, b).
template <typename Element>
Eigen::MatrixXd project_impl(const SymmetrySector& sector, Element h) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double sign = (sector.parity == Parity::Even) ? 1.0 : -1.0;
  const std::size_t dim = sector.dim();
  Eigen::MatrixXd out(dim, dim);

  auto entries = [&](std::size_t j, std::size_t idx[2], double coeff[2]) -> int {
    const auto& b = sector.basis[j];
    if (b.palindrome()) {
      idx[0] = b.index;
      coeff[0] = 1.0;
      return 1;
    }
    idx[0] = b.index;
    idx[1] = b.partner;
    coeff[0] = inv_sqrt2;
    coeff[1] = sign * inv_sqrt2;
    return 2;
  };

  for (std::size_t q = 0; q < dim; ++q) {
    std::size_t qi[2];
    double qc[2];
    const int nq = entries(q, qi, qc);
    for (std::size_t p = 0; p <= q; ++p) {
      std::size_t pi[2];
      double pc[2];
      const int np = entries(p, pi, pc);
      double v = 0.0;
      for (int x = 0; x < np; ++x)
        for (int y = 0; y < nq; ++y) v += pc[x] * qc[y] * h(pi[x], qi[y]);
      out(p, q) = v;
      out(q, p) = v;
    }
  }
  return out;
}

template <typename Element>
double cross_block_max_impl(const SymmetrySector& even, const SymmetrySector& odd, Element h) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (const auto& e : even.basis) {
    for (const auto& o : odd.basis) {
      // <even_p| H |odd_q>; odd vectors are (|s> - |rev s>)/sqrt(2).
      double v;
      if (e.palindrome()) {
        v = inv_sqrt2 * (h(e.index, o.index) - h(e.index, o.partner));
      } else {
        v = 0.5 * (h(e.index, o.index) - h(e.index, o.partner) + h(e.partner, o.index) -
                   h(e.partner, o.partner));
      }
      worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

}  // namespace

Eigen::MatrixXd project_to_sector(const HamiltonianMatrix& H, const SymmetrySector& sector) {
  if (sector.L != H.params.L)
    throw std::invalid_argument("project_to_sector: sector built for a different L");
  const auto& M = H.matrix;
  return project_impl(sector, [&M](std::size_t a, std::size_t b) { return M(a, b); });
}

Eigen::MatrixXd sector_matrix(const ChainParams& p, const SymmetrySector& sector) {
  p.validate();
  if (sector.L != p.L) throw std::invalid_argument("sector_matrix: sector built for a different L");
  return project_impl(sector,
                      [&p](std::size_t a, std::size_t b) { return hamiltonian_element(p, a, b); });
}

double cross_sector_max(const ChainParams& p, const SymmetrySector& even,
                        const SymmetrySector& odd) {
  p.validate();
  return cross_block_max_impl(even, odd, [&p](std::size_t a, std::size_t b) {
    return hamiltonian_element(p, a, b);
  });
}

double duality_check(const ChainParams& p) {
  p.validate();
  ChainParams flipped = p;
  flipped.J = -p.J;

  const Eigen::VectorXd w_plus = linalg::symmetric_eigenvalues(build_hamiltonian(p).matrix);
  const Eigen::VectorXd w_minus = linalg::symmetric_eigenvalues(build_hamiltonian(flipped).matrix);
  const Eigen::Index n = w_plus.size();
  double dev = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    dev = std::max(dev, std::abs(w_plus[k] + w_minus[n - 1 - k]));
  }

  if (p.L <= 6) {
    // Conjugating by the site-wise sigma^y product sends |a> to a phase times
    // |~a>; element-wise this reads
    //   (-1)^{pc(a)+pc(b)} H_J(~a, ~b) = -H_{-J}(a, b).
    const std::size_t dim = p.dim();
    const std::size_t mask = dim - 1;
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        const double sgn = ((std::popcount(a) + std::popcount(b)) % 2 == 0) ? 1.0 : -1.0;
        const double lhs = sgn * hamiltonian_element(p, ~a & mask, ~b & mask);
        const double rhs = -hamiltonian_element(flipped, a, b);
        dev = std::max(dev, std::abs(lhs - rhs));
      }
    }
  }
  return dev;
}

}  // namespace tilted_ising
